#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

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

const QuadraticReal phi{Rational(1, 2), Rational(1, 2), 5};

Subring by_labels(const FusionRing& r, std::initializer_list<const char*> labels) {
  Subring s;
  for (const char* l : labels) s.basis.push_back(r.index_of(l));
  std::sort(s.basis.begin(), s.basis.end());
  return s;
}

}  // namespace

TEST_CASE("generalized near-group detection") {
  CHECK(is_gng(psu2_6()));
  CHECK(is_gng(fibonacci()));
  CHECK_FALSE(is_gng(deligne_product(fibonacci(), fibonacci())));
  CHECK(code_of([] { (void)is_gng(pointed(named_cyclic(3))); }) == Errc::PointedInput);
  CHECK(code_of([] { (void)gng_type(deligne_product(fibonacci(), fibonacci())); }) == Errc::TypeExtractionFailure);
}

TEST_CASE("GNG types") {
  const auto psu = gng_type(psu2_6());
  CHECK(psu.group().order() == 2);
  CHECK(psu.gamma.size() == 1);
  CHECK(psu.kvec == std::map<std::string, std::int64_t>{{"X", 1}, {"Y", 1}});
  CHECK_FALSE(psu.k_zero());

  const auto ty = gng_type(tambara_yamagami(named_cyclic(4)));
  CHECK(is_isomorphic(ty.group(), cyclic(4)));
  CHECK(ty.gamma.size() == 4);
  CHECK(ty.k_zero());

  const auto ng = gng_type(near_group(named_cyclic(2), 1));
  CHECK(ng.gamma.size() == 2);
  CHECK(ng.kvec == std::map<std::string, std::int64_t>{{"X", 1}});
}

TEST_CASE("rank and dimension formulas") {
  const auto psu = psu2_6();
  const auto r1 = check_rank_dim(psu, gng_type(psu));
  CHECK(r1.pass);
  CHECK(r1.details["rank"] == 4);
  CHECK(fpdim_ring(psu).exact() == QuadraticReal(8, 4, 2));

  const auto ty = tambara_yamagami(named_cyclic(2));
  const auto r2 = check_rank_dim(ty, gng_type(ty));
  CHECK(r2.pass);
  CHECK(r2.details["rank"] == 3);
  CHECK(fpdim_ring(ty).exact() == QuadraticReal(4));

  const auto fib = fibonacci();
  CHECK(check_rank_dim(fib, gng_type(fib)).details["expected_rank"] == 2);

  // a deliberately wrong type must be caught
  auto wrong = gng_type(psu);
  wrong.gamma = whole_group(wrong.group());
  CHECK_FALSE(check_rank_dim(psu, wrong).pass);
}

TEST_CASE("GTY and near-group recognition") {
  CHECK(is_gty(tambara_yamagami(named_cyclic(8))));
  CHECK_FALSE(is_gty(psu2_6()));
  CHECK(is_gty(n_ising(3)));
  CHECK_FALSE(is_gty(fibonacci()));
  CHECK(is_near_group(fibonacci()));
  CHECK(is_near_group(tambara_yamagami(named_cyclic(2))));
  CHECK_FALSE(is_near_group(psu2_6()));
  CHECK_FALSE(is_near_group(pointed(named_cyclic(2))));
}

TEST_CASE("detectors agree across the families") {
  std::vector<FusionRing> rings{fibonacci(), psu2_6(), near_group(named_cyclic(3), 2), su2_level(2), su2_level(4),
                                fib_extension(named_cyclic(4)), deligne_product(fibonacci(), fibonacci()),
                                deligne_product(tambara_yamagami(named_cyclic(2)), tambara_yamagami(named_cyclic(2)))};
  for (int n = 1; n <= 5; ++n) rings.push_back(n_ising(n));
  for (const auto& r : rings) CHECK_MESSAGE(gty_by_kvec(r) == gty_by_grading(r), r.name());
}

TEST_CASE("GTY grading order is twice the index") {
  for (int n = 1; n <= 5; ++n) {
    const auto r = n_ising(n);
    const auto t = gng_type(r);
    const auto index = t.group().order() / t.gamma.size();
    CHECK(universal_grading(r).group.order() == 2 * index);
  }
  for (int n : {2, 3, 4, 6})
    CHECK(universal_grading(tambara_yamagami(named_cyclic(n))).group.order() == 2);
}

TEST_CASE("cd sets") {
  const auto fib = cd_set(fibonacci());
  REQUIRE(fib.size() == 2);
  CHECK(fib[0].exact() == QuadraticReal(1));
  CHECK(fib[1].exact() == phi);
  for (int n = 1; n <= 4; ++n) {
    const auto cd = cd_set(n_ising(n));
    REQUIRE(cd.size() == 2);
    CHECK(cd[1].exact() == QuadraticReal::sqrt(2));
  }
  CHECK(cd_set(pointed(named_symmetric(3))).size() == 1);
  CHECK(format_type(ring_type(psu2_6())) == "(1,2; 1+1*sqrt(2),2)");
}

TEST_CASE("cosine equation search") {
  // exact identity behind the target: cos(pi/5) = (1+sqrt5)/4
  const QuadraticReal c5{Rational(1, 4), Rational(1, 4), 5};
  CHECK(Rational(1, 4) + c5 * c5 == QuadraticReal(Rational(5, 8), Rational(1, 8), 5));

  for (int bound : {10, 25, 50}) {
    const auto r = lemma41_search(bound);
    CHECK(r.pairs == std::vector<std::pair<int, int>>{{3, 5}});
    CHECK(r.triples.empty());
  }
  CHECK(code_of([] { (void)lemma41_search(9); }) == Errc::InvalidArgument);

  // independent brute force with long double
  const long double target = (5.0L + std::sqrt(5.0L)) / 8.0L;
  int hits = 0;
  for (int a = 3; a <= 30; ++a)
    for (int b = a; b <= 30; ++b) {
      const long double ca = std::cos(std::numbers::pi_v<long double> / a);
      const long double cb = std::cos(std::numbers::pi_v<long double> / b);
      if (std::fabs(ca * ca + cb * cb - target) < 1e-12L) ++hits;
    }
  CHECK(hits == 1);
}

TEST_CASE("Fibonacci extension classification") {
  const auto r3 = classify_fib_extension(fib_extension(named_cyclic(3)));
  CHECK(r3.pass);
  CHECK(r3.details["n"] == 3);
  CHECK(r3.details["type"] == "(1,3; 1/2+1/2*sqrt(5),3)");
  const auto r1 = classify_fib_extension(fibonacci());
  CHECK(r1.pass);
  CHECK(r1.details["type"] == "(1,1; 1/2+1/2*sqrt(5),1)");
  const auto s3 = classify_fib_extension(fib_extension(named_symmetric(3)));
  CHECK(s3.pass);
  CHECK(s3.details["n"] == 6);
  CHECK(code_of([] { (void)classify_fib_extension(psu2_6()); }) == Errc::NotFibExtension);
  CHECK(code_of([] { (void)classify_fib_extension(pointed(named_cyclic(2))); }) == Errc::NotFibExtension);
}

TEST_CASE("exact factorizations") {
  const auto f2 = fib_extension(named_cyclic(2));
  CHECK(exact_factorization(f2, adjoint_subring(f2), pointed_subring(f2)));
  CHECK(exact_factorization(f2, pointed_subring(f2), adjoint_subring(f2)));
  CHECK_FALSE(exact_factorization(f2, whole_ring(f2), whole_ring(f2)));
  const auto ty = tambara_yamagami(named_cyclic(2));
  CHECK_FALSE(exact_factorization(ty, pointed_subring(ty), pointed_subring(ty)));
  const auto ff = deligne_product(fibonacci(), fibonacci());
  CHECK(exact_factorization(ff, by_labels(ff, {"(1,1)", "(X,1)"}), by_labels(ff, {"(1,1)", "(1,X)"})));
  // trivial factors: the unit subring times the whole ring
  CHECK(exact_factorization(ff, by_labels(ff, {"(1,1)"}), whole_ring(ff)));
}

TEST_CASE("structure theorem") {
  const auto psu = check_structure_theorem(psu2_6());
  CHECK(psu.pass);
  CHECK(psu.details["subgroups"] == 1);
  const auto z6 = check_structure_theorem(fib_extension(named_cyclic(6)));
  CHECK(z6.pass);
  CHECK(z6.details["subgroups"] == 4);
  CHECK(z6.details["graded_subrings"] == 4);
  const auto f2 = fib_extension(named_cyclic(2));
  CHECK(check_structure_theorem(f2).pass);
  const auto g = universal_grading(f2);
  for (const auto& comp : g.components) {
    int inv = 0;
    for (int i : comp) inv += is_invertible(f2, i) ? 1 : 0;
    CHECK(inv == 1);
    CHECK(comp.size() == 2);
  }
  // k = 0 rings fall outside the precondition
  CHECK_FALSE(check_structure_theorem(tambara_yamagami(named_cyclic(2))).details["precondition"].get<bool>());
}

TEST_CASE("minimal number of summands") {
  CHECK(min_summands_check({2, 2}));
  CHECK(min_summands_check({1}));
  CHECK(min_summands_check({1, 1}));
  // sum m^2 = 8 only via (2,2) and eight 1s
  CHECK(min_summands_check({1, 1, 1, 1, 1, 1, 1, 1}));
  const auto sweep = min_summands_sweep(128);
  CHECK(sweep.violations.empty());
  CHECK(sweep.vectors > 1000);
  CHECK(std::find(sweep.tight.begin(), sweep.tight.end(), std::vector<std::int64_t>{2, 2}) != sweep.tight.end());

  // independent oracle: for each i, the least sum m under sum m^2 = 2^(2i-1) by dynamic programming
  for (int i = 1; i <= 3; ++i) {
    const int target = 1 << (2 * i - 1);
    std::vector<int> best(static_cast<std::size_t>(target) + 1, 1 << 20);
    best[0] = 0;
    for (int s = 1; s <= target; ++s)
      for (int m = 1; m * m <= s; ++m) best[s] = std::min(best[s], best[s - m * m] + m);
    CHECK(best[target] >= (1 << i));
  }
}

TEST_CASE("GNG subrings") {
  const auto f3 = fib_extension(named_cyclic(3));
  CHECK(gng_subring_check(f3, adjoint_subring(f3)));
  const auto psu = psu2_6();
  CHECK(gng_subring_check(psu, whole_ring(psu)));
  CHECK(code_of([&] { (void)gng_subring_check(f3, pointed_subring(f3)); }) == Errc::NotPointedPrecondition);
  Subring broken;
  broken.basis = {0, psu.index_of("X")};
  CHECK(code_of([&] { (void)gng_subring_check(psu, broken); }) == Errc::NotClosed);
}
