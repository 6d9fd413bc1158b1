#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fuskit/fusion_ring.hpp"
#include "fuskit/group.hpp"
#include "fuskit/structure.hpp"

namespace fuskit {

using ojson = nlohmann::ordered_json;

// Outcome of one named check. witness stays null unless something failed
// (or the check exhibits a positive example).
struct CheckReport {
  std::string check;
  bool pass = true;
  ojson witness;
  ojson details = ojson::object();
};

// (G, Gamma, k): invertibles, common stabilizer of the non-invertibles (as
// indices into G) and the multiplicity of each non-invertible in X X*.
struct GNGType {
  InvertibleGroup invertibles;
  Subgroup gamma;
  std::map<std::string, std::int64_t> kvec;
  const GroupTable& group() const noexcept { return invertibles.group; }
  bool k_zero() const;
};

// One orbit of non-invertibles under the invertibles. Throws PointedInput.
bool is_gng(const FusionRing& ring);
// Throws TypeExtractionFailure when the ring is not GNG or the non-invertibles
// disagree on X X*.
GNGType gng_type(const FusionRing& ring);
// rank = [G:Gamma](1+|Gamma|) and FPdim = [G:Gamma](d^2+|Gamma|).
CheckReport check_rank_dim(const FusionRing& ring, const GNGType& t);

// Distinct simple dimensions, ascending.
std::vector<RealValue> cd_set(const FusionRing& ring);
// Distinct dimensions with how many simples carry each, ascending.
std::vector<std::pair<RealValue, int>> ring_type(const FusionRing& ring);
std::string format_type(const std::vector<std::pair<RealValue, int>>& type);

// k = 0 detector, cross-checked against the |cd| = 2 plus Z2-grading
// characterization. Throws DetectorDisagreement if they differ.
bool is_gty(const FusionRing& ring);
bool gty_by_kvec(const FusionRing& ring);
bool gty_by_grading(const FusionRing& ring);
bool is_near_group(const FusionRing& ring);

struct CosineSolutions {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> triples;
};
// Integer solutions 3 <= a <= b (<= c) <= bound of
// cos^2(pi/a) + cos^2(pi/b) (+ cos^2(pi/c)) = (5+sqrt5)/8.
CosineSolutions lemma41_search(int bound);

// Throws NotFibExtension unless the trivial component is a Fibonacci ring.
CheckReport classify_fib_extension(const FusionRing& ring);
bool exact_factorization(const FusionRing& ring, const Subring& a, const Subring& b);
CheckReport check_structure_theorem(const FusionRing& ring);

// sum m^2 = 2^(2i-1) implies sum m >= 2^i.
bool min_summands_check(const std::vector<std::int64_t>& mults);
struct SummandSweep {
  std::int64_t vectors = 0;
  std::vector<std::vector<std::int64_t>> violations;
  std::vector<std::vector<std::int64_t>> tight;  // cases with sum m = 2^i exactly
};
// Every non-increasing positive vector with sum m^2 <= limit.
SummandSweep min_summands_sweep(std::int64_t limit);

// Throws NotClosed / NotPointedPrecondition.
bool gng_subring_check(const FusionRing& ring, const Subring& s);

}  // namespace fuskit
