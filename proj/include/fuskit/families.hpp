#pragma once

#include <string>

#include <json.hpp>

#include "fuskit/fusion_ring.hpp"
#include "fuskit/group.hpp"

namespace fuskit {

// Group table together with the short name used in ring names ("Z3", "S3",
// "Z2xZ4").
struct NamedGroup {
  std::string name;
  GroupTable table;
};

NamedGroup named_cyclic(int n);
NamedGroup named_symmetric(int n);
NamedGroup named_product(const NamedGroup& a, const NamedGroup& b);

// Accepts "Z4", "S3", "Z2xZ4", {"type":"cyclic","n":4},
// {"type":"symmetric","n":3}, {"type":"product","factors":[...]} or an
// explicit {"elements","identity","table"} object.
NamedGroup parse_group_spec(const nlohmann::json& spec);

FusionRing pointed(const NamedGroup& g);
// X X = sum of G + kappa X. Throws NotAssociative if the result fails validate.
FusionRing near_group(const NamedGroup& g, int kappa);
FusionRing tambara_yamagami(const NamedGroup& g);
// Abelian G, subgroup gamma, twist element u: basis G plus X_s for s in G/gamma,
// X_s X_t = sum over the coset s t u. Throws UnsupportedNonabelian.
FusionRing gty(const NamedGroup& g, const Subgroup& gamma, int twist);
FusionRing fibonacci();
// Y_g Y_h = d_gh + Y_gh, d_g Y_h = Y_gh, Y_h d_g = Y_hg, d_g d_h = d_gh.
FusionRing fib_extension(const NamedGroup& g);
// Truncated SU(2) fusion rules at level k with labels 0..k (twice the spin).
FusionRing su2_level(int k);
FusionRing adjoint_extract(const FusionRing& ring);
// The rank-4 ring {1, d, X, Y}.
FusionRing psu2_6();
// gty(Z2 x Z_{2^{N-1}}, first factor, generator of the second factor); the
// defining invariants are asserted after construction (AssertionFailure).
FusionRing n_ising(int n);
FusionRing deligne_product(const FusionRing& a, const FusionRing& b);

// Builds a ring from a family spec such as
// {"family":"fib_extension","group":{"type":"cyclic","n":3}} or a bare family
// name ("psu2_6"). Throws ParseError / InvalidArgument on a bad spec.
FusionRing construct(const nlohmann::json& spec);

}  // namespace fuskit
