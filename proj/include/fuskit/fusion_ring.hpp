#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuskit/polynomial.hpp"
#include "fuskit/quadratic.hpp"

namespace fuskit {

struct StructureConstant {
  int i = 0, j = 0, k = 0;
  std::int64_t m = 0;
  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

// One summand of a product of basis elements.
struct Term {
  int index = 0;
  std::int64_t mult = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

// Finitely supported non-negative combination of basis elements. The zero
// object is a valid value.
class ObjectVec {
 public:
  ObjectVec() = default;
  static ObjectVec simple(int i) {
    ObjectVec v;
    v.add(i, 1);
    return v;
  }

  void add(int i, std::int64_t m);
  std::int64_t operator[](int i) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  // Total number of simple summands counted with multiplicity.
  std::int64_t length() const;
  std::vector<int> support() const;
  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }

  friend bool operator==(const ObjectVec&, const ObjectVec&) = default;

 private:
  std::map<int, std::int64_t> terms_;
};

namespace detail {
struct DimCache;
}

// Based ring with basis X_0..X_{r-1}: X_i X_j = sum_k N_{ij}^k X_k. Only
// non-zero constants are stored. Immutable once built.
class FusionRing {
 public:
  // Throws InvalidArgument / IndexOutOfRange on structurally malformed data
  // (bad indices, duplicate labels or triples, non-positive multiplicities).
  // The ring axioms themselves are checked by validate().
  FusionRing(std::string name, std::vector<std::string> basis, int unit, std::vector<int> dual,
             std::vector<StructureConstant> constants);

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  int unit() const noexcept { return unit_; }
  int dual(int i) const { return dual_.at(static_cast<std::size_t>(i)); }
  const std::string& label(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  // Throws UnknownElement.
  int index_of(std::string_view label) const;

  // Summands of X_i X_j sorted by index.
  const std::vector<Term>& product(int i, int j) const;
  std::int64_t constant(int i, int j, int k) const;
  // All non-zero constants in lexicographic (i, j, k) order.
  std::vector<StructureConstant> constants() const;

  // Matrix of left multiplication by X_i: entry (k, j) is N_{ij}^k.
  IntMatrix left_matrix(int i) const;

  FusionRing renamed(std::string name) const;

 private:
  friend const std::vector<RealValue>& fpdims(const FusionRing& ring);

  void check_index(int i) const;

  std::string name_;
  std::vector<std::string> basis_;
  int unit_ = 0;
  std::vector<int> dual_;
  std::vector<std::vector<Term>> products_;  // row-major r x r
  std::shared_ptr<detail::DimCache> dims_;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<int> witness;  // first violating index tuple
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool pass() const;
  const AxiomCheck* first_failure() const;
};

enum class ValidationMode { Full, FastFail };

// Exhaustive check of every based-ring axiom, O(r^4) for associativity.
ValidationReport validate(const FusionRing& ring, ValidationMode mode = ValidationMode::Full);

// Bilinear extension of the structure constants. Throws IndexOutOfRange.
ObjectVec tensor(const FusionRing& ring, const ObjectVec& u, const ObjectVec& v);
ObjectVec dual(const FusionRing& ring, const ObjectVec& v);
ObjectVec self_decomp(const FusionRing& ring, int i);
inline std::int64_t hom_mult(const FusionRing&, int i, const ObjectVec& v) { return v[i]; }
bool is_invertible(const FusionRing& ring, int i);
bool is_commutative(const FusionRing& ring);

// Frobenius-Perron dimensions, cached per ring. Propagates ConvergenceFailure.
const std::vector<RealValue>& fpdims(const FusionRing& ring);
RealValue fpdim_simple(const FusionRing& ring, int i);
RealValue fpdim_ring(const FusionRing& ring);
// Sum of squared dimensions over a subset of the basis.
RealValue fpdim_of(const FusionRing& ring, const std::vector<int>& members);

// Basis bijection a -> b preserving unit, duals and every constant.
std::optional<std::vector<int>> find_ring_isomorphism(const FusionRing& a, const FusionRing& b);

// "1 + X + 2Y" style rendering.
std::string format_object(const FusionRing& ring, const ObjectVec& v);

}  // namespace fuskit
