#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fuskit/classify.hpp"
#include "fuskit/error.hpp"
#include "fuskit/families.hpp"

using namespace fuskit;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::AssertionFailure;
}

bool isomorphic(const FusionRing& a, const FusionRing& b) { return find_ring_isomorphism(a, b).has_value(); }

// Abelian groups of order <= 16 up to isomorphism.
std::vector<NamedGroup> small_abelian_groups() {
  const auto z = named_cyclic;
  const auto x = named_product;
  std::vector<NamedGroup> out;
  for (int n = 1; n <= 16; ++n) out.push_back(z(n));
  out.push_back(x(z(2), z(2)));
  out.push_back(x(z(2), z(4)));
  out.push_back(x(x(z(2), z(2)), z(2)));
  out.push_back(x(z(3), z(3)));
  out.push_back(x(z(2), z(6)));
  out.push_back(x(z(2), z(8)));
  out.push_back(x(z(4), z(4)));
  out.push_back(x(x(z(2), z(2)), z(4)));
  out.push_back(x(x(x(z(2), z(2)), z(2)), z(2)));
  return out;
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_group_spec("Z4").table.order() == 4);
  CHECK(parse_group_spec("S3").name == "S3");
  CHECK(parse_group_spec("Z2xZ4").table.order() == 8);
  CHECK(parse_group_spec(nlohmann::json{{"type", "cyclic"}, {"n", 5}}).name == "Z5");
  CHECK(parse_group_spec(nlohmann::json{{"type", "product"}, {"factors", {"Z2", "Z3"}}}).name == "Z2xZ3");
  const nlohmann::json explicit_table = {
      {"elements", {"e", "a"}}, {"identity", "e"}, {"table", nlohmann::json::array({{"e", "a"}, {"a", "e"}})}};
  CHECK(is_isomorphic(parse_group_spec(explicit_table).table, cyclic(2)));
  CHECK(code_of([] { (void)parse_group_spec("Q8"); }) == Errc::ParseError);
  CHECK(code_of([] { (void)parse_group_spec("Z0"); }) == Errc::ParseError);
}

TEST_CASE("pointed rings") {
  CHECK(pointed(named_cyclic(1)).rank() == 1);
  const auto z2 = pointed(named_cyclic(2));
  CHECK(z2.rank() == 2);
  CHECK(fpdim_ring(z2).exact() == QuadraticReal(2));
  const auto s3 = pointed(named_symmetric(3));
  CHECK(s3.rank() == 6);
  CHECK_FALSE(is_commutative(s3));
}

TEST_CASE("near-group rings") {
  CHECK(isomorphic(near_group(named_cyclic(1), 1), fibonacci()));
  const auto ty = near_group(named_cyclic(2), 0);
  CHECK(isomorphic(ty, tambara_yamagami(named_cyclic(2))));
  const auto ng = near_group(named_cyclic(2), 1);
  CHECK(ng.rank() == 3);
  CHECK(fpdim_simple(ng, ng.index_of("X")).exact() == QuadraticReal(2));
  CHECK(code_of([] { (void)near_group(named_cyclic(2), -1); }) == Errc::InvalidArgument);
  // every kappa gives an associative ring at the level of fusion rules
  for (int kappa = 0; kappa <= 4; ++kappa)
    for (const auto& g : {named_cyclic(3), named_symmetric(3)}) CHECK(validate(near_group(g, kappa)).pass());
}

TEST_CASE("generalized Tambara-Yamagami rings") {
  const auto z2 = named_cyclic(2);
  const auto whole = whole_group(z2.table);
  CHECK(isomorphic(gty(z2, whole, 0), tambara_yamagami(z2)));
  const auto z4 = named_cyclic(4);
  const int two[] = {2};
  const auto r = gty(z4, subgroup_generated(z4.table, two), 0);
  CHECK(r.rank() == 6);
  const auto t = gng_type(r);
  CHECK(t.gamma.size() == 2);
  CHECK(t.k_zero());
  CHECK(code_of([] { (void)gty(named_symmetric(3), trivial_subgroup(symmetric(3)), 0); }) ==
        Errc::UnsupportedNonabelian);
  CHECK(code_of([&] { (void)gty(z4, Subgroup{{0, 1}}, 0); }) == Errc::InvalidArgument);
}

TEST_CASE("gty over every small abelian group, subgroup and twist has type (G, Gamma, 0)") {
  int rings = 0;
  for (const auto& g : small_abelian_groups()) {
    for (const auto& gamma : all_subgroups(g.table)) {
      if (gamma.size() == 1) continue;  // X_s X_t is then a single invertible: the ring is pointed
      const Quotient q = quotient(g.table, gamma);
      std::vector<int> reps(q.group.order(), -1);
      for (int e = 0; e < static_cast<int>(g.table.order()); ++e)
        if (reps[static_cast<std::size_t>(q.coset_of[static_cast<std::size_t>(e)])] < 0)
          reps[static_cast<std::size_t>(q.coset_of[static_cast<std::size_t>(e)])] = e;
      for (int u : reps) {
        const auto ring = gty(g, gamma, u);
        REQUIRE(validate(ring).pass());
        const auto t = gng_type(ring);
        CHECK(is_isomorphic(t.group(), g.table));
        CHECK(t.gamma.size() == gamma.size());
        CHECK(t.k_zero());
        CHECK(check_rank_dim(ring, t).pass);
        CHECK(is_gty(ring));
        ++rings;
      }
    }
  }
  CHECK(rings > 100);
}

TEST_CASE("Fibonacci and its extensions") {
  const auto fib = fibonacci();
  CHECK(fib.basis() == std::vector<std::string>{"1", "X"});
  CHECK(isomorphic(fib_extension(named_cyclic(1)), fib));
  const auto f3 = fib_extension(named_cyclic(3));
  CHECK(f3.rank() == 6);
  CHECK(fpdim_ring(f3).exact() == QuadraticReal(Rational(15, 2), Rational(3, 2), 5));
  const auto s3 = fib_extension(named_symmetric(3));
  CHECK(s3.rank() == 12);
  CHECK_FALSE(is_commutative(s3));
  for (const auto& g : {named_cyclic(2), named_cyclic(3), named_cyclic(4), named_product(named_cyclic(2), named_cyclic(2)),
                        named_symmetric(3), named_cyclic(6)}) {
    const auto r = fib_extension(g);
    CHECK(validate(r).pass());
    CHECK(classify_fib_extension(r).pass);
    CHECK(exact_factorization(r, adjoint_subring(r), pointed_subring(r)));
    CHECK(is_isomorphic(universal_grading(r).group, g.table));
  }
}

TEST_CASE("SU(2) level k") {
  const auto s1 = su2_level(1);
  CHECK(s1.rank() == 2);
  CHECK(is_invertible(s1, 1));
  const auto s2 = su2_level(2);
  CHECK(s2.rank() == 3);
  const auto cd = cd_set(s2);
  REQUIRE(cd.size() == 2);
  CHECK(cd[1].exact() == QuadraticReal::sqrt(2));
  CHECK(code_of([] { (void)su2_level(0); }) == Errc::InvalidArgument);
  for (int k = 1; k <= 8; ++k) CHECK(validate(su2_level(k)).pass());
  const auto ad = adjoint_extract(su2_level(6));
  CHECK(ad.rank() == 4);
  CHECK(ad.basis() == std::vector<std::string>{"0", "2", "4", "6"});
}

TEST_CASE("PSU(2)_6") {
  const auto psu = psu2_6();
  CHECK(psu.rank() == 4);
  CHECK(validate(psu).pass());
  const auto t = gng_type(psu);
  CHECK(t.group().order() == 2);
  CHECK(t.gamma.size() == 1);
  CHECK(t.kvec == std::map<std::string, std::int64_t>{{"X", 1}, {"Y", 1}});
  CHECK(universal_grading(psu).group.order() == 1);
  CHECK(isomorphic(adjoint_extract(su2_level(6)), psu));
}

TEST_CASE("N-Ising rings") {
  const auto n1 = n_ising(1);
  CHECK(isomorphic(n1, tambara_yamagami(named_cyclic(2))));
  const int x1 = static_cast<int>(n1.rank()) - 1;
  CHECK(n1.dual(x1) == x1);
  const auto n3 = n_ising(3);
  CHECK(n3.rank() == 12);
  CHECK(is_isomorphic(universal_grading(n3).group, cyclic(8)));
  const auto n2 = n_ising(2);
  CHECK(cd_set(n2).size() == 2);
  int non_invertible = 0;
  for (int i = 0; i < static_cast<int>(n2.rank()); ++i)
    if (!is_invertible(n2, i)) {
      ++non_invertible;
      CHECK(n2.dual(i) != i);
    }
  CHECK(non_invertible == 2);
  CHECK(code_of([] { (void)n_ising(0); }) == Errc::InvalidArgument);
  // the Gamma/twist choice matches the explicit gty spelling
  const auto g = named_product(named_cyclic(2), named_cyclic(4));
  const int gen[] = {g.table.index_of("(1,0)")};
  CHECK(isomorphic(gty(g, subgroup_generated(g.table, gen), g.table.index_of("(0,1)")), n3));
}

TEST_CASE("Deligne products") {
  const auto p = deligne_product(fibonacci(), pointed(named_cyclic(5)));
  CHECK(p.rank() == 10);
  CHECK(is_gng(p));
  CHECK(gng_type(p).gamma.size() == 1);
  const auto trivial = deligne_product(psu2_6(), pointed(named_cyclic(1)));
  CHECK(isomorphic(trivial, psu2_6()));
  const auto q = deligne_product(psu2_6(), pointed(named_cyclic(3)));
  CHECK(q.rank() == 12);
  CHECK(isomorphic(adjoint_extract(q), psu2_6()));

  const std::vector<std::pair<FusionRing, FusionRing>> pairs{
      {fibonacci(), fibonacci()}, {psu2_6(), tambara_yamagami(named_cyclic(2))}, {fib_extension(named_cyclic(2)), su2_level(3)}};
  for (const auto& [a, b] : pairs) {
    const auto ab = deligne_product(a, b);
    CHECK(validate(ab).pass());
    CHECK(ab.rank() == a.rank() * b.rank());
    // FPdim is multiplicative, exactly
    CHECK(approx_equal(fpdim_ring(ab), fpdim_ring(a) * fpdim_ring(b)));
    if (fpdim_ring(ab).is_exact()) CHECK(fpdim_ring(ab).exact() == fpdim_ring(a).exact() * fpdim_ring(b).exact());
    // adjoint of the product is the product of the adjoints, as basis sets
    std::vector<int> expected;
    for (int i : adjoint_subring(a).basis)
      for (int j : adjoint_subring(b).basis) expected.push_back(i * static_cast<int>(b.rank()) + j);
    std::sort(expected.begin(), expected.end());
    CHECK(adjoint_subring(ab).basis == expected);
  }
}

TEST_CASE("construct from family specs") {
  using nlohmann::json;
  CHECK(construct("psu2_6").rank() == 4);
  CHECK(construct(json{{"family", "fib_extension"}, {"group", {{"type", "cyclic"}, {"n", 3}}}}).rank() == 6);
  CHECK(construct(json{{"family", "near_group"}, {"group", "Z2"}, {"kappa", 1}}).rank() == 3);
  CHECK(construct(json{{"family", "tambara_yamagami"}, {"group", "Z4"}}).rank() == 5);
  CHECK(construct(json{{"family", "gty"}, {"group", "Z2xZ4"}, {"gamma", {"(1,0)"}}, {"twist", "(0,1)"}}).rank() == 12);
  CHECK(construct(json{{"family", "su2_level"}, {"k", 4}}).rank() == 5);
  CHECK(construct(json{{"family", "n_ising"}, {"N", 2}}).rank() == 6);
  CHECK(construct(json{{"family", "pointed"}, {"group", "S3"}}).rank() == 6);
  CHECK(construct(json{{"family", "product"}, {"factors", {"fibonacci", "fibonacci"}}}).rank() == 4);
  CHECK(construct(json{{"family", "adjoint"}, {"of", {{"family", "su2_level"}, {"k", 6}}}}).rank() == 4);
  CHECK(code_of([] { (void)construct(json{{"family", "nope"}}); }) == Errc::ParseError);
  CHECK(code_of([] { (void)construct(json{{"family", "near_group"}, {"group", "Z2"}}); }) == Errc::ParseError);
  CHECK(code_of([] { (void)construct(json{{"family", "su2_level"}, {"k", "x"}}); }) == Errc::ParseError);
  CHECK(code_of([] { (void)construct(json{{"family", "gty"}, {"group", "Z4"}, {"gamma", {"9"}}}); }) ==
        Errc::UnknownElement);
}

TEST_CASE("every constructor output validates") {
  std::vector<FusionRing> all{fibonacci(), psu2_6()};
  for (int n = 1; n <= 6; ++n) all.push_back(n_ising(n));
  for (int k = 1; k <= 7; ++k) all.push_back(adjoint_extract(su2_level(k)));
  for (const auto& g : {named_cyclic(5), named_symmetric(3), named_product(named_cyclic(2), named_cyclic(2))}) {
    all.push_back(pointed(g));
    all.push_back(tambara_yamagami(g));
    all.push_back(fib_extension(g));
  }
  for (const auto& r : all) CHECK_MESSAGE(validate(r).pass(), r.name());
}
