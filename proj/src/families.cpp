#include "fuskit/families.hpp"

#include <algorithm>
#include <charconv>

#include "fuskit/error.hpp"
#include "fuskit/structure.hpp"

namespace fuskit {

using nlohmann::json;

NamedGroup named_cyclic(int n) { return {"Z" + std::to_string(n), cyclic(n)}; }
NamedGroup named_symmetric(int n) { return {"S" + std::to_string(n), symmetric(n)}; }
NamedGroup named_product(const NamedGroup& a, const NamedGroup& b) {
  return {a.name + "x" + b.name, direct_product(a.table, b.table)};
}

namespace {

Error bad_spec(const std::string& why) { return Error(Errc::ParseError, "family spec: " + why); }

int parse_positive(std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v < 1)
    throw bad_spec("bad group order '" + std::string(text) + "'");
  return v;
}

NamedGroup parse_group_name(std::string_view text) {
  if (text == "1" || text == "trivial") return named_cyclic(1);
  std::vector<NamedGroup> factors;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('x', start), text.size());
    const std::string_view part = text.substr(start, end - start);
    if (part.size() < 2) throw bad_spec("bad group name '" + std::string(text) + "'");
    if (part[0] == 'Z') factors.push_back(named_cyclic(parse_positive(part.substr(1))));
    else if (part[0] == 'S') factors.push_back(named_symmetric(parse_positive(part.substr(1))));
    else throw bad_spec("bad group name '" + std::string(text) + "'");
    start = end + 1;
  }
  NamedGroup g = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) g = named_product(g, factors[i]);
  return g;
}

template <class T>
T field(const json& spec, const char* key) {
  if (!spec.contains(key)) throw bad_spec(std::string("missing '") + key + "'");
  try {
    return spec.at(key).get<T>();
  } catch (const json::exception&) {
    throw bad_spec(std::string("bad value for '") + key + "'");
  }
}

FusionRing checked(FusionRing ring) {
  const auto report = validate(ring, ValidationMode::FastFail);
  if (const auto* f = report.first_failure()) {
    std::string where;
    for (int i : f->witness) where += (where.empty() ? "" : ",") + ring.label(i);
    throw Error(Errc::NotAssociative, ring.name() + " fails " + f->axiom + " at (" + where + ")");
  }
  return ring;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::AssertionFailure, what);
}

}  // namespace

NamedGroup parse_group_spec(const json& spec) {
  if (spec.is_string()) return parse_group_name(spec.get<std::string>());
  if (!spec.is_object()) throw bad_spec("group must be a string or an object");
  if (spec.contains("elements")) {
    const auto labels = field<std::vector<std::string>>(spec, "elements");
    const auto identity = field<std::string>(spec, "identity");
    const auto rows = field<std::vector<std::vector<std::string>>>(spec, "table");
    const auto index = [&](const std::string& l) {
      const auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) throw Error(Errc::UnknownElement, "unknown group element '" + l + "'");
      return static_cast<int>(it - labels.begin());
    };
    std::vector<std::vector<int>> table;
    for (const auto& row : rows) {
      table.emplace_back();
      for (const auto& l : row) table.back().push_back(index(l));
    }
    const std::string name = spec.value("name", "G" + std::to_string(labels.size()));
    return {name, GroupTable(labels, std::move(table), index(identity))};
  }
  const auto type = field<std::string>(spec, "type");
  if (type == "cyclic") return named_cyclic(field<int>(spec, "n"));
  if (type == "symmetric") return named_symmetric(field<int>(spec, "n"));
  if (type == "product") {
    const json& factors = spec.at("factors");
    if (!factors.is_array() || factors.empty()) throw bad_spec("product needs factors");
    NamedGroup g = parse_group_spec(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) g = named_product(g, parse_group_spec(factors[i]));
    return g;
  }
  throw bad_spec("unknown group type '" + type + "'");
}

// ---------------------------------------------------------------------------

FusionRing pointed(const NamedGroup& g) {
  const GroupTable& t = g.table;
  const int n = static_cast<int>(t.order());
  std::vector<int> duals;
  std::vector<StructureConstant> constants;
  for (int a = 0; a < n; ++a) {
    duals.push_back(t.inverse(a));
    for (int b = 0; b < n; ++b) constants.push_back({a, b, t.mul(a, b), 1});
  }
  return FusionRing("pointed(" + g.name + ")", t.labels(), t.identity(), std::move(duals), std::move(constants));
}

FusionRing near_group(const NamedGroup& g, int kappa) {
  if (kappa < 0) throw Error(Errc::InvalidArgument, "kappa must be non-negative");
  const GroupTable& t = g.table;
  const int n = static_cast<int>(t.order());
  const int x = n;
  std::vector<std::string> labels = t.labels();
  labels.push_back("X");
  std::vector<int> duals;
  std::vector<StructureConstant> constants;
  for (int a = 0; a < n; ++a) {
    duals.push_back(t.inverse(a));
    for (int b = 0; b < n; ++b) constants.push_back({a, b, t.mul(a, b), 1});
    constants.push_back({a, x, x, 1});
    constants.push_back({x, a, x, 1});
    constants.push_back({x, x, a, 1});
  }
  duals.push_back(x);
  if (kappa > 0) constants.push_back({x, x, x, kappa});
  return checked(FusionRing("near_group(" + g.name + "," + std::to_string(kappa) + ")", std::move(labels),
                            t.identity(), std::move(duals), std::move(constants)));
}

FusionRing tambara_yamagami(const NamedGroup& g) {
  return near_group(g, 0).renamed("tambara_yamagami(" + g.name + ")");
}

FusionRing gty(const NamedGroup& g, const Subgroup& gamma, int twist) {
  const GroupTable& t = g.table;
  if (!t.is_abelian()) throw Error(Errc::UnsupportedNonabelian, "gty requires an abelian group");
  if (!is_subgroup(t, gamma.members)) throw Error(Errc::InvalidArgument, "gamma is not a subgroup");
  if (twist < 0 || static_cast<std::size_t>(twist) >= t.order()) throw Error(Errc::UnknownElement, "twist out of range");
  const Quotient q = quotient(t, gamma);
  const int n = static_cast<int>(t.order());
  const int cosets = static_cast<int>(q.group.order());
  const auto x = [&](int s) { return n + s; };
  const int u = q.coset_of[static_cast<std::size_t>(twist)];

  std::vector<std::string> labels = t.labels();
  for (int s = 0; s < cosets; ++s) labels.push_back("X" + q.group.label(s));
  std::vector<int> duals;
  std::vector<StructureConstant> constants;
  for (int a = 0; a < n; ++a) {
    duals.push_back(t.inverse(a));
    const int abar = q.coset_of[static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b) constants.push_back({a, b, t.mul(a, b), 1});
    for (int s = 0; s < cosets; ++s) {
      constants.push_back({a, x(s), x(q.group.mul(abar, s)), 1});
      constants.push_back({x(s), a, x(q.group.mul(s, abar)), 1});
    }
  }
  for (int s = 0; s < cosets; ++s) {
    duals.push_back(x(q.group.mul(q.group.inverse(s), q.group.inverse(u))));
    for (int r = 0; r < cosets; ++r) {
      const int target = q.group.mul(q.group.mul(s, r), u);
      for (int h = 0; h < n; ++h)
        if (q.coset_of[static_cast<std::size_t>(h)] == target) constants.push_back({x(s), x(r), h, 1});
    }
  }
  std::string gamma_text;
  for (int m : gamma.members) gamma_text += (gamma_text.empty() ? "" : ",") + t.label(m);
  const std::string name = "gty(" + g.name + ",{" + gamma_text + "}," + t.label(twist) + ")";
  try {
    return checked(FusionRing(name, std::move(labels), t.identity(), std::move(duals), std::move(constants)));
  } catch (const Error& e) {
    if (e.code() == Errc::NotAssociative) throw Error(Errc::AssertionFailure, e.what());
    throw;
  }
}

FusionRing fibonacci() {
  return FusionRing("fibonacci", {"1", "X"}, 0, {0, 1},
                    {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}});
}

FusionRing fib_extension(const NamedGroup& g) {
  const GroupTable& t = g.table;
  const int n = static_cast<int>(t.order());
  const auto d = [](int a) { return a; };
  const auto y = [n](int a) { return n + a; };
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) labels.push_back("d" + t.label(a));
  for (int a = 0; a < n; ++a) labels.push_back("Y" + t.label(a));
  std::vector<int> duals(static_cast<std::size_t>(2 * n));
  std::vector<StructureConstant> constants;
  for (int a = 0; a < n; ++a) {
    duals[static_cast<std::size_t>(d(a))] = d(t.inverse(a));
    duals[static_cast<std::size_t>(y(a))] = y(t.inverse(a));
    for (int b = 0; b < n; ++b) {
      const int ab = t.mul(a, b);
      constants.push_back({d(a), d(b), d(ab), 1});
      constants.push_back({d(a), y(b), y(ab), 1});
      constants.push_back({y(a), d(b), y(ab), 1});
      constants.push_back({y(a), y(b), d(ab), 1});
      constants.push_back({y(a), y(b), y(ab), 1});
    }
  }
  return checked(FusionRing("fib_extension(" + g.name + ")", std::move(labels), d(t.identity()), std::move(duals),
                            std::move(constants)));
}

FusionRing su2_level(int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "level must be >= 1");
  std::vector<std::string> labels;
  std::vector<int> duals;
  std::vector<StructureConstant> constants;
  for (int a = 0; a <= k; ++a) {
    labels.push_back(std::to_string(a));
    duals.push_back(a);
    for (int b = 0; b <= k; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k - a - b); c += 2) constants.push_back({a, b, c, 1});
  }
  return checked(FusionRing("su2_level(" + std::to_string(k) + ")", std::move(labels), 0, std::move(duals),
                            std::move(constants)));
}

FusionRing adjoint_extract(const FusionRing& ring) {
  return extract_subring(ring, adjoint_subring(ring), "adjoint(" + ring.name() + ")");
}

FusionRing psu2_6() {
  enum { one, delta, X, Y };
  std::vector<StructureConstant> constants{
      {one, one, one, 1},  {one, delta, delta, 1}, {one, X, X, 1},      {one, Y, Y, 1},
      {delta, one, delta, 1}, {X, one, X, 1},      {Y, one, Y, 1},
      {delta, delta, one, 1}, {delta, X, Y, 1},    {delta, Y, X, 1},    {X, delta, Y, 1}, {Y, delta, X, 1},
      {X, X, one, 1},      {X, X, X, 1},           {X, X, Y, 1},
      {Y, Y, one, 1},      {Y, Y, X, 1},           {Y, Y, Y, 1},
      {X, Y, delta, 1},    {X, Y, X, 1},           {X, Y, Y, 1},
      {Y, X, delta, 1},    {Y, X, X, 1},           {Y, X, Y, 1},
  };
  return checked(FusionRing("psu2_6", {"1", "d", "X", "Y"}, one, {one, delta, X, Y}, std::move(constants)));
}

FusionRing n_ising(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "N must be >= 1");
  if (n > 6) throw Error(Errc::SizeLimit, "n_ising supports N <= 6");
  const int half = 1 << (n - 1);
  const NamedGroup g = named_product(named_cyclic(2), named_cyclic(half));
  const Subgroup gamma = subgroup_generated(g.table, std::vector<int>{g.table.index_of("(1,0)")});
  const int twist = g.table.index_of(half > 1 ? "(0,1)" : "(0,0)");
  FusionRing ring = gty(g, gamma, twist).renamed("n_ising(" + std::to_string(n) + ")");

  const InvertibleGroup inv = invertibles(ring);
  require(is_isomorphic(inv.group, g.table), "invertibles are not Z2 x Z_{2^(N-1)}");
  const QuadraticReal root2 = QuadraticReal::sqrt(2);
  int non_invertible = 0;
  bool self_dual = false;
  for (int i = 0; i < static_cast<int>(ring.rank()); ++i) {
    if (inv.group_index[static_cast<std::size_t>(i)] >= 0) continue;
    ++non_invertible;
    const RealValue dim = fpdim_simple(ring, i);
    require(dim.is_exact() && dim.exact() == root2, "non-invertible of dimension other than sqrt(2)");
    self_dual |= ring.dual(i) == i;
  }
  require(non_invertible == half, "wrong number of non-invertibles");
  const GradingData grading = universal_grading(ring);
  require(grading.group.order() == static_cast<std::size_t>(2 * half) && is_cyclic(grading.group),
          "universal grading group is not cyclic of order 2^N");
  require(self_dual == (n == 1), "self-duality pattern of the non-invertibles is wrong");
  return ring;
}

FusionRing deligne_product(const FusionRing& a, const FusionRing& b) {
  const int ra = static_cast<int>(a.rank());
  const int rb = static_cast<int>(b.rank());
  const auto pair = [rb](int i, int j) { return i * rb + j; };
  std::vector<std::string> labels;
  std::vector<int> duals;
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < rb; ++j) {
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
      duals.push_back(pair(a.dual(i), b.dual(j)));
    }
  std::vector<StructureConstant> constants;
  for (int i1 = 0; i1 < ra; ++i1)
    for (int i2 = 0; i2 < ra; ++i2)
      for (const auto& s : a.product(i1, i2))
        for (int j1 = 0; j1 < rb; ++j1)
          for (int j2 = 0; j2 < rb; ++j2)
            for (const auto& t : b.product(j1, j2))
              constants.push_back({pair(i1, j1), pair(i2, j2), pair(s.index, t.index), s.mult * t.mult});
  return FusionRing("product(" + a.name() + "," + b.name() + ")", std::move(labels), pair(a.unit(), b.unit()),
                    std::move(duals), std::move(constants));
}

// ---------------------------------------------------------------------------

FusionRing construct(const json& spec) {
  if (spec.is_string()) return construct(json{{"family", spec.get<std::string>()}});
  if (!spec.is_object()) throw bad_spec("expected an object or a family name");
  const auto family = field<std::string>(spec, "family");
  const auto group = [&] {
    if (!spec.contains("group")) throw bad_spec("'" + family + "' needs a group");
    return parse_group_spec(spec.at("group"));
  };
  if (family == "fibonacci") return fibonacci();
  if (family == "psu2_6") return psu2_6();
  if (family == "pointed") return pointed(group());
  if (family == "tambara_yamagami") return tambara_yamagami(group());
  if (family == "near_group") return near_group(group(), field<int>(spec, "kappa"));
  if (family == "fib_extension") return fib_extension(group());
  if (family == "su2_level") return su2_level(field<int>(spec, "k"));
  if (family == "n_ising") return n_ising(field<int>(spec, "N"));
  if (family == "gty") {
    const NamedGroup g = group();
    std::vector<int> gens;
    for (const auto& l : field<std::vector<std::string>>(spec, "gamma")) gens.push_back(g.table.index_of(l));
    const int twist = spec.contains("twist") ? g.table.index_of(field<std::string>(spec, "twist")) : g.table.identity();
    return gty(g, subgroup_generated(g.table, gens), twist);
  }
  if (family == "product") {
    const json& factors = spec.contains("factors") ? spec.at("factors") : json();
    if (!factors.is_array() || factors.size() < 2) throw bad_spec("product needs at least two factors");
    FusionRing ring = construct(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) ring = deligne_product(ring, construct(factors[i]));
    return ring;
  }
  if (family == "adjoint") {
    if (!spec.contains("of")) throw bad_spec("adjoint needs 'of'");
    return adjoint_extract(construct(spec.at("of")));
  }
  throw bad_spec("unknown family '" + family + "'");
}

}  // namespace fuskit
