#pragma once

#include <string>
#include <vector>

#include "fuskit/fusion_ring.hpp"
#include "fuskit/group.hpp"

namespace fuskit {

// Sorted basis indices of a subring: contains the unit and is closed under
// duals and under taking summands of products.
struct Subring {
  std::vector<int> basis;

  std::size_t size() const noexcept { return basis.size(); }
  bool contains(int i) const;
  friend bool operator==(const Subring&, const Subring&) = default;
  friend auto operator<=>(const Subring& a, const Subring& b) { return a.basis <=> b.basis; }
};

// The invertible basis elements as a group. Group element e corresponds to
// basis index basis_index[e]; group_index maps back (-1 if not invertible).
struct InvertibleGroup {
  GroupTable group;
  std::vector<int> basis_index;
  std::vector<int> group_index;
};

InvertibleGroup invertibles(const FusionRing& ring);

// Left-multiplication action of the invertibles on the basis.
struct ActionData {
  InvertibleGroup invertibles;
  std::vector<std::vector<int>> orbits;  // ordered by least member
  std::vector<int> orbit_of;             // basis index -> orbit id
  std::vector<Subgroup> stabilizers;     // per basis index, in group indices
};

ActionData action(const FusionRing& ring);
// Basis index of g X_i for an invertible g.
int act(const FusionRing& ring, int g, int i);

bool is_subring(const FusionRing& ring, const std::vector<int>& members);
// Smallest subring containing seed.
Subring subring_closure(const FusionRing& ring, const std::vector<int>& seed);
Subring pointed_subring(const FusionRing& ring);
Subring adjoint_subring(const FusionRing& ring);
Subring whole_ring(const FusionRing& ring);
// Basis elements X with X X* inside b; commutator_subring closes this set.
std::vector<int> commutator_set(const FusionRing& ring, const Subring& b);
Subring commutator_subring(const FusionRing& ring, const Subring& b);

// The subring as a standalone ring. Throws NotClosed.
FusionRing extract_subring(const FusionRing& ring, const Subring& s, std::string name);

// Partition of the basis into homogeneous components with the induced
// group on component ids. Component ids are ordered by least basis index
// and the group element for component c is labelled by that element.
struct GradingData {
  GroupTable group;
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
  int trivial = 0;
};

// Throws GradingInconsistency when the classes do not induce a group.
GradingData universal_grading(const FusionRing& ring);
// True when products of components g, h land in component g*h, the unit sits
// in the identity component and duals land in inverse components.
bool is_grading(const FusionRing& ring, const GradingData& grading);
// Sum of squared dimensions per component.
std::vector<RealValue> graded_component_dims(const GradingData& grading, const FusionRing& ring);

}  // namespace fuskit
