#include "fuskit/fusion_ring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "fuskit/error.hpp"

namespace fuskit {

namespace detail {
struct DimCache {
  std::once_flag once;
  std::vector<RealValue> dims;
};
}  // namespace detail

void ObjectVec::add(int i, std::int64_t m) {
  if (m < 0) throw Error(Errc::InvalidArgument, "negative multiplicity");
  if (m == 0) return;
  terms_[i] += m;
}

std::int64_t ObjectVec::operator[](int i) const {
  const auto it = terms_.find(i);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t ObjectVec::length() const {
  std::int64_t n = 0;
  for (const auto& [i, m] : terms_) n += m;
  return n;
}

std::vector<int> ObjectVec::support() const {
  std::vector<int> out;
  for (const auto& [i, m] : terms_) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

FusionRing::FusionRing(std::string name, std::vector<std::string> basis, int unit, std::vector<int> dual,
                       std::vector<StructureConstant> constants)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      unit_(unit),
      dual_(std::move(dual)),
      dims_(std::make_shared<detail::DimCache>()) {
  const std::size_t r = basis_.size();
  if (r == 0) throw Error(Errc::InvalidArgument, "fusion ring needs a non-empty basis");
  if (std::set<std::string>(basis_.begin(), basis_.end()).size() != r)
    throw Error(Errc::InvalidArgument, "duplicate basis labels");
  check_index(unit_);
  if (dual_.size() != r) throw Error(Errc::InvalidArgument, "dual map has wrong length");
  for (int d : dual_) check_index(d);
  products_.assign(r * r, {});
  for (const auto& c : constants) {
    check_index(c.i);
    check_index(c.j);
    check_index(c.k);
    if (c.m <= 0) throw Error(Errc::InvalidArgument, "structure constants must be positive");
    products_[static_cast<std::size_t>(c.i) * r + static_cast<std::size_t>(c.j)].push_back({c.k, c.m});
  }
  for (auto& terms : products_) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    for (std::size_t t = 1; t < terms.size(); ++t)
      if (terms[t].index == terms[t - 1].index)
        throw Error(Errc::InvalidArgument, "duplicate structure constant");
  }
}

void FusionRing::check_index(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= basis_.size())
    throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(i) + " out of range");
}

int FusionRing::index_of(std::string_view label) const {
  const auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) throw Error(Errc::UnknownElement, "no basis element '" + std::string(label) + "'");
  return static_cast<int>(it - basis_.begin());
}

const std::vector<Term>& FusionRing::product(int i, int j) const {
  check_index(i);
  check_index(j);
  return products_[static_cast<std::size_t>(i) * rank() + static_cast<std::size_t>(j)];
}

std::int64_t FusionRing::constant(int i, int j, int k) const {
  for (const auto& t : product(i, j))
    if (t.index == k) return t.mult;
  return 0;
}

std::vector<StructureConstant> FusionRing::constants() const {
  std::vector<StructureConstant> out;
  for (int i = 0; i < static_cast<int>(rank()); ++i)
    for (int j = 0; j < static_cast<int>(rank()); ++j)
      for (const auto& t : product(i, j)) out.push_back({i, j, t.index, t.mult});
  return out;
}

IntMatrix FusionRing::left_matrix(int i) const {
  IntMatrix m(rank());
  for (int j = 0; j < static_cast<int>(rank()); ++j)
    for (const auto& t : product(i, j)) m(static_cast<std::size_t>(t.index), static_cast<std::size_t>(j)) = t.mult;
  return m;
}

FusionRing FusionRing::renamed(std::string name) const {
  FusionRing copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

// ---------------------------------------------------------------------------

bool ValidationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

// Dense accumulator for (X_i X_j) X_k style products.
void accumulate(const FusionRing& ring, const std::vector<std::int64_t>& left, int right,
                std::vector<std::int64_t>& out) {
  for (std::size_t m = 0; m < left.size(); ++m) {
    if (left[m] == 0) continue;
    for (const auto& t : ring.product(static_cast<int>(m), right))
      out[static_cast<std::size_t>(t.index)] += left[m] * t.mult;
  }
}

}  // namespace

ValidationReport validate(const FusionRing& ring, ValidationMode mode) {
  ValidationReport report;
  const int r = static_cast<int>(ring.rank());
  const int u = ring.unit();
  const bool fast = mode == ValidationMode::FastFail;

  // Each lambda returns the first witness, or nullopt when the axiom holds.
  using Witness = std::optional<std::pair<std::vector<int>, std::string>>;
  const std::vector<std::pair<std::string, std::function<Witness()>>> axioms = {
      {"dual_involution",
       [&]() -> Witness {
         for (int i = 0; i < r; ++i)
           if (ring.dual(ring.dual(i)) != i) return std::pair{std::vector{i}, "dual(dual(i)) != i"};
         return std::nullopt;
       }},
      {"dual_unit",
       [&]() -> Witness {
         if (ring.dual(u) != u) return std::pair{std::vector{u}, "unit is not self-dual"};
         return std::nullopt;
       }},
      {"unit_left",
       [&]() -> Witness {
         for (int j = 0; j < r; ++j)
           if (ring.product(u, j) != std::vector<Term>{{j, 1}}) return std::pair{std::vector{u, j}, "1 X_j != X_j"};
         return std::nullopt;
       }},
      {"unit_right",
       [&]() -> Witness {
         for (int i = 0; i < r; ++i)
           if (ring.product(i, u) != std::vector<Term>{{i, 1}}) return std::pair{std::vector{i, u}, "X_i 1 != X_i"};
         return std::nullopt;
       }},
      {"duality",
       [&]() -> Witness {
         for (int i = 0; i < r; ++i)
           for (int j = 0; j < r; ++j) {
             const std::int64_t expect = (j == ring.dual(i)) ? 1 : 0;
             if (ring.constant(i, j, u) != expect)
               return std::pair{std::vector{i, j, u}, "N_ij^1 must be 1 exactly when j = dual(i)"};
           }
         return std::nullopt;
       }},
      {"frobenius_reciprocity",
       [&]() -> Witness {
         for (int i = 0; i < r; ++i)
           for (int j = 0; j < r; ++j)
             for (int k = 0; k < r; ++k) {
               const std::int64_t n = ring.constant(i, j, k);
               if (n != ring.constant(ring.dual(i), k, j) || n != ring.constant(k, ring.dual(j), i))
                 return std::pair{std::vector{i, j, k}, "N_ij^k != N_{i*k}^j or N_{kj*}^i"};
             }
         return std::nullopt;
       }},
      {"associativity",
       [&]() -> Witness {
         std::vector<std::int64_t> ij(static_cast<std::size_t>(r)), lhs(static_cast<std::size_t>(r)),
             rhs(static_cast<std::size_t>(r));
         for (int i = 0; i < r; ++i)
           for (int j = 0; j < r; ++j) {
             std::fill(ij.begin(), ij.end(), 0);
             for (const auto& t : ring.product(i, j)) ij[static_cast<std::size_t>(t.index)] = t.mult;
             for (int k = 0; k < r; ++k) {
               std::fill(lhs.begin(), lhs.end(), 0);
               std::fill(rhs.begin(), rhs.end(), 0);
               accumulate(ring, ij, k, lhs);
               for (const auto& t : ring.product(j, k))
                 for (const auto& s : ring.product(i, t.index)) rhs[static_cast<std::size_t>(s.index)] += t.mult * s.mult;
               for (int l = 0; l < r; ++l)
                 if (lhs[static_cast<std::size_t>(l)] != rhs[static_cast<std::size_t>(l)])
                   return std::pair{std::vector{i, j, k, l}, "(X_i X_j) X_k != X_i (X_j X_k) at X_l"};
             }
           }
         return std::nullopt;
       }},
  };

  for (const auto& [name, check] : axioms) {
    AxiomCheck result{name, true, {}, {}};
    if (auto w = check()) {
      result.pass = false;
      result.witness = std::move(w->first);
      result.detail = std::move(w->second);
    }
    report.checks.push_back(std::move(result));
    if (fast && !report.checks.back().pass) break;
  }
  return report;
}

ObjectVec tensor(const FusionRing& ring, const ObjectVec& u, const ObjectVec& v) {
  ObjectVec out;
  for (const auto& [i, a] : u.terms())
    for (const auto& [j, b] : v.terms())
      for (const auto& t : ring.product(i, j)) out.add(t.index, a * b * t.mult);
  return out;
}

ObjectVec dual(const FusionRing& ring, const ObjectVec& v) {
  ObjectVec out;
  for (const auto& [i, m] : v.terms()) out.add(ring.dual(i), m);
  return out;
}

ObjectVec self_decomp(const FusionRing& ring, int i) {
  return tensor(ring, ObjectVec::simple(i), ObjectVec::simple(ring.dual(i)));
}

bool is_invertible(const FusionRing& ring, int i) { return self_decomp(ring, i) == ObjectVec::simple(ring.unit()); }

const std::vector<RealValue>& fpdims(const FusionRing& ring) {
  detail::DimCache& cache = *ring.dims_;
  std::call_once(cache.once, [&] {
    std::vector<RealValue> dims;
    dims.reserve(ring.rank());
    for (int i = 0; i < static_cast<int>(ring.rank()); ++i) dims.push_back(perron_root(ring.left_matrix(i)));
    cache.dims = std::move(dims);
  });
  return cache.dims;
}

RealValue fpdim_simple(const FusionRing& ring, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= ring.rank())
    throw Error(Errc::IndexOutOfRange, "basis index out of range");
  return fpdims(ring)[static_cast<std::size_t>(i)];
}

RealValue fpdim_of(const FusionRing& ring, const std::vector<int>& members) {
  const auto& dims = fpdims(ring);
  RealValue total(QuadraticReal(0));
  for (int i : members) {
    const RealValue& d = dims.at(static_cast<std::size_t>(i));
    total = total + d * d;
  }
  return total;
}

RealValue fpdim_ring(const FusionRing& ring) {
  std::vector<int> all(ring.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return fpdim_of(ring, all);
}

// ---------------------------------------------------------------------------

namespace {

// Relabelling-invariant fingerprint of a basis element.
std::vector<std::int64_t> signature(const FusionRing& ring, int i) {
  std::vector<std::int64_t> sig;
  sig.push_back(ring.dual(i) == i);
  sig.push_back(i == ring.unit());
  const auto sd = self_decomp(ring, i);
  std::vector<std::int64_t> mults;
  for (const auto& [k, m] : sd.terms()) mults.push_back(m);
  std::sort(mults.begin(), mults.end());
  sig.push_back(static_cast<std::int64_t>(mults.size()));
  sig.insert(sig.end(), mults.begin(), mults.end());
  std::vector<std::int64_t> row;
  for (int j = 0; j < static_cast<int>(ring.rank()); ++j) {
    std::int64_t total = 0;
    for (const auto& t : ring.product(i, j)) total += t.mult;
    row.push_back(total);
  }
  std::sort(row.begin(), row.end());
  sig.insert(sig.end(), row.begin(), row.end());
  return sig;
}

}  // namespace

std::optional<std::vector<int>> find_ring_isomorphism(const FusionRing& a, const FusionRing& b) {
  const int r = static_cast<int>(a.rank());
  if (a.rank() != b.rank()) return std::nullopt;
  std::vector<std::vector<std::int64_t>> sa(static_cast<std::size_t>(r)), sb(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    sa[static_cast<std::size_t>(i)] = signature(a, i);
    sb[static_cast<std::size_t>(i)] = signature(b, i);
  }
  std::vector<int> map(static_cast<std::size_t>(r), -1);
  std::vector<bool> used(static_cast<std::size_t>(r), false);

  // Every constant among assigned elements must agree.
  const auto consistent = [&](int x) {
    for (int i = 0; i < r; ++i) {
      if (map[static_cast<std::size_t>(i)] < 0) continue;
      for (int j = 0; j < r; ++j) {
        if (map[static_cast<std::size_t>(j)] < 0) continue;
        if (i != x && j != x) continue;
        for (int k = 0; k < r; ++k) {
          const int mk = map[static_cast<std::size_t>(k)];
          if (mk < 0) continue;
          if (a.constant(i, j, k) != b.constant(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)], mk))
            return false;
        }
      }
      const int di = a.dual(i), mdi = map[static_cast<std::size_t>(di)];
      if (mdi >= 0 && mdi != b.dual(map[static_cast<std::size_t>(i)])) return false;
    }
    return true;
  };

  std::function<bool(int)> search = [&](int x) -> bool {
    if (x == r) return true;
    for (int y = 0; y < r; ++y) {
      if (used[static_cast<std::size_t>(y)] || sa[static_cast<std::size_t>(x)] != sb[static_cast<std::size_t>(y)]) continue;
      map[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      if (consistent(x) && search(x + 1)) return true;
      map[static_cast<std::size_t>(x)] = -1;
      used[static_cast<std::size_t>(y)] = false;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return map;
}

std::string format_object(const FusionRing& ring, const ObjectVec& v) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, m] : v.terms()) {
    if (!first) out << " + ";
    if (m != 1) out << m;
    out << ring.label(i);
    first = false;
  }
  return out.str();
}

bool is_commutative(const FusionRing& ring) {
  const int r = static_cast<int>(ring.rank());
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (ring.product(i, j) != ring.product(j, i)) return false;
  return true;
}

}  // namespace fuskit
