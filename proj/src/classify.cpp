#include "fuskit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "fuskit/error.hpp"
#include "fuskit/families.hpp"
#include "fuskit/serialize.hpp"

namespace fuskit {

namespace {

std::vector<int> non_invertibles(const FusionRing& ring) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(ring.rank()); ++i)
    if (!is_invertible(ring, i)) out.push_back(i);
  return out;
}

RealValue integer(std::int64_t n) { return RealValue(QuadraticReal(n)); }

// Exact equality when both sides are exact, tolerance otherwise.
bool same_value(const RealValue& x, const RealValue& y) { return approx_equal(x, y, 1e-9); }

}  // namespace

bool GNGType::k_zero() const {
  return std::all_of(kvec.begin(), kvec.end(), [](const auto& kv) { return kv.second == 0; });
}

bool is_gng(const FusionRing& ring) {
  const auto non_inv = non_invertibles(ring);
  if (non_inv.empty()) throw Error(Errc::PointedInput, ring.name() + " is pointed");
  const ActionData data = action(ring);
  std::set<int> orbits;
  for (int i : non_inv) orbits.insert(data.orbit_of[static_cast<std::size_t>(i)]);
  return orbits.size() == 1;
}

GNGType gng_type(const FusionRing& ring) {
  if (!is_gng(ring)) throw Error(Errc::TypeExtractionFailure, ring.name() + " has several non-invertible orbits");
  const ActionData data = action(ring);
  const auto non_inv = non_invertibles(ring);
  const int x = non_inv.front();
  const ObjectVec reference = self_decomp(ring, x);
  for (int y : non_inv)
    if (!(self_decomp(ring, y) == reference))
      throw Error(Errc::TypeExtractionFailure,
                  ring.label(x) + " and " + ring.label(y) + " have different self-decompositions");

  GNGType t{data.invertibles, data.stabilizers[static_cast<std::size_t>(x)], {}};
  // X X* restricted to invertibles must be the stabilizer.
  for (std::size_t g = 0; g < t.invertibles.basis_index.size(); ++g) {
    const std::int64_t m = reference[t.invertibles.basis_index[g]];
    if (m != (t.gamma.contains(static_cast<int>(g)) ? 1 : 0))
      throw Error(Errc::TypeExtractionFailure, "invertible part of X X* differs from the stabilizer");
  }
  if (!is_normal(t.group(), t.gamma)) throw Error(Errc::TypeExtractionFailure, "stabilizer is not normal");
  for (int y : non_inv) t.kvec[ring.label(y)] = reference[y];
  return t;
}

CheckReport check_rank_dim(const FusionRing& ring, const GNGType& t) {
  CheckReport rep{"gng-rank-dim", true, nullptr, ojson::object()};
  const std::int64_t g = static_cast<std::int64_t>(t.group().order());
  const std::int64_t gamma = static_cast<std::int64_t>(t.gamma.size());
  const std::int64_t index = g / gamma;
  const std::int64_t expected_rank = index * (1 + gamma);
  const int x = non_invertibles(ring).front();
  const RealValue d = fpdim_simple(ring, x);
  const RealValue expected_dim = integer(index) * (d * d + integer(gamma));
  const RealValue actual_dim = fpdim_ring(ring);
  const bool rank_ok = expected_rank == static_cast<std::int64_t>(ring.rank());
  const bool dim_ok = same_value(expected_dim, actual_dim);
  rep.pass = rank_ok && dim_ok;
  rep.details["ring"] = ring.name();
  rep.details["index"] = index;
  rep.details["gamma_order"] = gamma;
  rep.details["rank"] = ring.rank();
  rep.details["expected_rank"] = expected_rank;
  rep.details["fpdim"] = real_to_json(actual_dim);
  rep.details["expected_fpdim"] = real_to_json(expected_dim);
  rep.details["exact"] = expected_dim.is_exact() && actual_dim.is_exact();
  if (!rep.pass) rep.witness = rank_ok ? "fpdim" : "rank";
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<RealValue, int>> ring_type(const FusionRing& ring) {
  std::vector<std::pair<RealValue, int>> out;
  for (const auto& d : fpdims(ring)) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return same_value(e.first, d); });
    if (it == out.end()) out.emplace_back(d, 1);
    else ++it->second;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return value_less(a.first, b.first); });
  return out;
}

std::vector<RealValue> cd_set(const FusionRing& ring) {
  std::vector<RealValue> out;
  for (const auto& e : ring_type(ring)) out.push_back(e.first);
  return out;
}

std::string format_type(const std::vector<std::pair<RealValue, int>>& type) {
  std::string out = "(";
  for (std::size_t n = 0; n < type.size(); ++n) {
    if (n) out += "; ";
    out += type[n].first.to_string() + "," + std::to_string(type[n].second);
  }
  return out + ")";
}

bool gty_by_kvec(const FusionRing& ring) {
  try {
    return is_gng(ring) && gng_type(ring).k_zero();
  } catch (const Error& e) {
    if (e.code() == Errc::PointedInput) return false;
    throw;
  }
}

bool gty_by_grading(const FusionRing& ring) {
  if (cd_set(ring).size() != 2) return false;
  const int r = static_cast<int>(ring.rank());
  std::vector<bool> odd(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) odd[static_cast<std::size_t>(i)] = !is_invertible(ring, i);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (const auto& t : ring.product(i, j))
        if (odd[static_cast<std::size_t>(t.index)] != (odd[static_cast<std::size_t>(i)] != odd[static_cast<std::size_t>(j)]))
          return false;
  return true;
}

bool is_gty(const FusionRing& ring) {
  const bool a = gty_by_kvec(ring);
  const bool b = gty_by_grading(ring);
  if (a != b)
    throw Error(Errc::DetectorDisagreement, ring.name() + ": k-vector detector says " + (a ? "yes" : "no") +
                                                ", grading detector says " + (b ? "yes" : "no"));
  return a;
}

bool is_near_group(const FusionRing& ring) { return non_invertibles(ring).size() == 1; }

// ---------------------------------------------------------------------------

CosineSolutions lemma41_search(int bound) {
  if (bound < 10) throw Error(Errc::InvalidArgument, "bound must be at least 10");
  const QuadraticReal exact_target(Rational(5, 8), Rational(1, 8), 5);
  const double target = exact_target.to_double();
  const auto f = [](int x) {
    const double c = std::cos(std::numbers::pi / x);
    return c * c;
  };
  CosineSolutions out;
  for (int a = 3; a <= bound; ++a) {
    if (f(a) >= target) break;  // f is increasing, every further term only adds
    for (int b = a; b <= bound; ++b) {
      const double s = f(a) + f(b);
      if (std::fabs(s - target) <= 1e-12) out.pairs.emplace_back(a, b);
      for (int c = b; c <= bound; ++c) {
        const double t = s + f(c);
        if (t > target + 1e-12) break;
        if (std::fabs(t - target) <= 1e-12) out.triples.push_back({a, b, c});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

CheckReport classify_fib_extension(const FusionRing& ring) {
  GradingData grading = [&] {
    try {
      return universal_grading(ring);
    } catch (const Error& e) {
      throw Error(Errc::NotFibExtension, ring.name() + ": " + e.what());
    }
  }();
  const auto& trivial = grading.components[static_cast<std::size_t>(grading.trivial)];
  const FusionRing ad = extract_subring(ring, Subring{trivial}, "adjoint(" + ring.name() + ")");
  if (!find_ring_isomorphism(ad, fibonacci()))
    throw Error(Errc::NotFibExtension, ring.name() + ": trivial component is not a Fibonacci ring");

  const QuadraticReal phi(Rational(1, 2), Rational(1, 2), 5);
  CheckReport rep{"fib-extension-type", true, nullptr, ojson::object()};
  rep.details["ring"] = ring.name();

  // (a) every component is {1, phi}
  ojson bad = ojson::array();
  for (const auto& comp : grading.components) {
    std::vector<RealValue> dims;
    for (int i : comp) dims.push_back(fpdim_simple(ring, i));
    std::sort(dims.begin(), dims.end(), value_less);
    const bool ok = comp.size() == 2 && same_value(dims[0], integer(1)) && same_value(dims[1], RealValue(phi));
    if (!ok) bad.push_back(labels_json(ring, comp));
  }
  const bool components_ok = bad.empty();

  // (b) type (1,n; phi,n)
  const InvertibleGroup inv = invertibles(ring);
  const auto n = static_cast<int>(inv.basis_index.size());
  const auto type = ring_type(ring);
  const bool type_ok = type.size() == 2 && same_value(type[0].first, integer(1)) && type[0].second == n &&
                       same_value(type[1].first, RealValue(phi)) && type[1].second == n;

  // (c) U(C) isomorphic to G(C)
  const bool iso_ok = is_isomorphic(grading.group, inv.group);

  rep.pass = components_ok && type_ok && iso_ok;
  rep.details["n"] = n;
  rep.details["type"] = format_type(type);
  rep.details["components_rank2"] = components_ok;
  rep.details["type_matches"] = type_ok;
  rep.details["grading_order"] = grading.group.order();
  rep.details["grading_iso_invertibles"] = iso_ok;
  if (!components_ok) rep.witness = bad;
  else if (!rep.pass) rep.witness = type_ok ? "grading group" : "type";
  return rep;
}

bool exact_factorization(const FusionRing& ring, const Subring& a, const Subring& b) {
  for (int x : a.basis)
    if (x != ring.unit() && b.contains(x)) return false;
  std::vector<int> hit(ring.rank(), 0);
  for (int x : a.basis)
    for (int y : b.basis) {
      const auto& p = ring.product(x, y);
      if (p.size() != 1 || p[0].mult != 1) return false;
      if (hit[static_cast<std::size_t>(p[0].index)]++) return false;
    }
  return a.size() * b.size() == ring.rank();
}

CheckReport check_structure_theorem(const FusionRing& ring) {
  CheckReport rep{"structure-theorem", true, nullptr, ojson::object()};
  rep.details["ring"] = ring.name();
  bool pre = false;
  try {
    pre = is_gng(ring) && !gng_type(ring).k_zero();
  } catch (const Error&) {
  }
  rep.details["precondition"] = pre;
  if (!pre) {
    rep.pass = false;
    rep.witness = "ring is not GNG with non-zero k";
    return rep;
  }

  // (a) adjoint is GNG with trivial universal grading
  const Subring ad = adjoint_subring(ring);
  const FusionRing ad_ring = extract_subring(ring, ad, "adjoint(" + ring.name() + ")");
  bool ad_gng = false;
  try {
    ad_gng = is_gng(ad_ring);
  } catch (const Error&) {
  }
  const bool ad_trivial = universal_grading(ad_ring).group.order() == 1;
  rep.details["adjoint_gng"] = ad_gng;
  rep.details["adjoint_grading_trivial"] = ad_trivial;

  // (b) subgroups of U(C) <-> non-pointed graded subrings
  const GradingData grading = universal_grading(ring);
  std::set<std::vector<int>> lattice;
  bool graded_ok = true;
  const auto subgroups = all_subgroups(grading.group);
  for (const auto& h : subgroups) {
    std::vector<int> members;
    for (int c : h.members)
      for (int i : grading.components[static_cast<std::size_t>(c)]) members.push_back(i);
    std::sort(members.begin(), members.end());
    const bool pointed = std::all_of(members.begin(), members.end(), [&](int i) { return is_invertible(ring, i); });
    if (!is_subring(ring, members) || pointed) {
      graded_ok = false;
      if (rep.witness.is_null()) rep.witness = labels_json(ring, members);
    }
    lattice.insert(members);
  }
  bool closures_ok = true;
  for (int x : non_invertibles(ring)) {
    const Subring s = subring_closure(ring, {x});
    if (!lattice.contains(s.basis)) {
      closures_ok = false;
      if (rep.witness.is_null()) rep.witness = ring.label(x);
    }
  }
  rep.details["subgroups"] = subgroups.size();
  rep.details["graded_subrings"] = lattice.size();
  rep.details["graded_subrings_ok"] = graded_ok && lattice.size() == subgroups.size();
  rep.details["closures_in_lattice"] = closures_ok;

  // (c) C_g = delta C_ad for each invertible delta in C_g
  bool components_ok = true;
  for (const auto& comp : grading.components) {
    int invertible_count = 0;
    bool ok = comp.size() == ad.size();
    for (int delta : comp) {
      if (!is_invertible(ring, delta)) continue;
      ++invertible_count;
      std::vector<int> image;
      for (int a : ad.basis) {
        const auto& p = ring.product(delta, a);
        if (p.size() != 1) ok = false;
        else image.push_back(p[0].index);
      }
      std::sort(image.begin(), image.end());
      ok = ok && image == comp;
    }
    if (!ok || invertible_count == 0) {
      components_ok = false;
      if (rep.witness.is_null()) rep.witness = labels_json(ring, comp);
    }
  }
  rep.details["components_translate_adjoint"] = components_ok;
  rep.pass = ad_gng && ad_trivial && graded_ok && lattice.size() == subgroups.size() && closures_ok && components_ok;
  if (!rep.pass && rep.witness.is_null()) rep.witness = "adjoint subring";
  return rep;
}

// ---------------------------------------------------------------------------

bool min_summands_check(const std::vector<std::int64_t>& mults) {
  std::int64_t squares = 0, total = 0;
  for (auto m : mults) {
    if (m <= 0) throw Error(Errc::InvalidArgument, "multiplicities must be positive");
    squares = detail::checked_add(squares, detail::checked_mul(m, m));
    total = detail::checked_add(total, m);
  }
  for (int i = 1; i < 31; ++i) {
    const std::int64_t p = std::int64_t{1} << (2 * i - 1);
    if (p == squares) return total >= (std::int64_t{1} << i);
    if (p > squares) break;
  }
  return true;
}

namespace {

bool power_of_two_rule_tight(const std::vector<std::int64_t>& m) {
  std::int64_t squares = 0, total = 0;
  for (auto v : m) {
    squares += v * v;
    total += v;
  }
  for (int i = 1; i < 31; ++i)
    if ((std::int64_t{1} << (2 * i - 1)) == squares) return total == (std::int64_t{1} << i);
  return false;
}

void sweep(std::vector<std::int64_t>& prefix, std::int64_t max_part, std::int64_t budget, SummandSweep& out) {
  if (!prefix.empty()) {
    ++out.vectors;
    if (!min_summands_check(prefix)) out.violations.push_back(prefix);
    else if (power_of_two_rule_tight(prefix)) out.tight.push_back(prefix);
  }
  for (std::int64_t m = 1; m <= max_part && m * m <= budget; ++m) {
    prefix.push_back(m);
    sweep(prefix, m, budget - m * m, out);
    prefix.pop_back();
  }
}

}  // namespace

SummandSweep min_summands_sweep(std::int64_t limit) {
  SummandSweep out;
  std::vector<std::int64_t> prefix;
  // Largest parts first keeps each multiset once: vectors are non-increasing.
  std::int64_t top = 1;
  while ((top + 1) * (top + 1) <= limit) ++top;
  sweep(prefix, top, limit, out);
  for (auto& v : out.tight) std::reverse(v.begin(), v.end());
  for (auto& v : out.violations) std::reverse(v.begin(), v.end());
  std::sort(out.tight.begin(), out.tight.end());
  std::sort(out.violations.begin(), out.violations.end());
  return out;
}

bool gng_subring_check(const FusionRing& ring, const Subring& s) {
  if (!is_subring(ring, s.basis)) throw Error(Errc::NotClosed, "basis subset is not a subring");
  if (std::all_of(s.basis.begin(), s.basis.end(), [&](int i) { return is_invertible(ring, i); }))
    throw Error(Errc::NotPointedPrecondition, "subring is pointed");
  return is_gng(extract_subring(ring, s, ring.name() + "|sub"));
}

}  // namespace fuskit
