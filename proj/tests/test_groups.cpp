#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fuskit/error.hpp"
#include "fuskit/group.hpp"

using namespace fuskit;

namespace {

// Brute force: every subset closed under the product (finite, so inverses
// come for free) that contains the identity.
int count_subgroups_by_subsets(const GroupTable& g) {
  const int n = static_cast<int>(g.order());
  int count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.mul(a, b) & 1)) closed = false;
    count += closed;
  }
  return count;
}

void check_group_axioms(const GroupTable& g) {
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    std::set<int> row, col;
    for (int b = 0; b < n; ++b) {
      row.insert(g.mul(a, b));
      col.insert(g.mul(b, a));
      for (int c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
    CHECK(static_cast<int>(row.size()) == n);
    CHECK(static_cast<int>(col.size()) == n);
    CHECK(g.mul(a, g.inverse(a)) == g.identity());
    CHECK(g.mul(g.inverse(a), a) == g.identity());
    CHECK(g.mul(g.identity(), a) == a);
  }
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::AssertionFailure;
}

}  // namespace

TEST_CASE("constructors") {
  CHECK(cyclic(1).order() == 1);
  CHECK(direct_product(cyclic(2), cyclic(2)).order() == 4);
  CHECK(direct_product(cyclic(2), cyclic(4)).order() == 8);
  CHECK(symmetric(3).order() == 6);
  CHECK_FALSE(symmetric(3).is_abelian());
  CHECK(symmetric(5).order() == 120);
  CHECK(code_of([] { (void)symmetric(6); }) == Errc::SizeLimit);
  CHECK(direct_product(cyclic(2), cyclic(3)).label(1) == "(0,1)");
  for (const auto& g : {cyclic(1), cyclic(7), direct_product(cyclic(2), cyclic(4)), symmetric(3), symmetric(4)})
    check_group_axioms(g);
}

TEST_CASE("bad tables are rejected") {
  CHECK(code_of([] { GroupTable({"a", "b"}, {{0, 1}, {1, 1}}, 0); }) == Errc::InvalidArgument);
  CHECK(code_of([] { GroupTable({"a", "b"}, {{1, 0}, {0, 1}}, 0); }) == Errc::InvalidArgument);
  // Latin square with identity but not associative (order 5 loop)
  CHECK(code_of([] {
          GroupTable({"e", "a", "b", "c", "d"},
                     {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}, 0);
        }) == Errc::InvalidArgument);
  CHECK(code_of([] { (void)cyclic(3).index_of("x"); }) == Errc::UnknownElement);
}

TEST_CASE("subgroup_generated") {
  const auto z6 = cyclic(6);
  const int two[] = {2};
  CHECK(subgroup_generated(z6, two).members == std::vector<int>{0, 2, 4});
  CHECK(subgroup_generated(z6, std::span<const int>{}).members == std::vector<int>{0});
  const auto v = direct_product(cyclic(2), cyclic(2));
  const int gens[] = {v.index_of("(1,0)"), v.index_of("(0,1)")};
  CHECK(subgroup_generated(v, gens).size() == 4);
  const int bad[] = {9};
  CHECK(code_of([&] { (void)subgroup_generated(z6, bad); }) == Errc::UnknownElement);
}

TEST_CASE("normality and quotients") {
  const auto z4 = cyclic(4);
  const int two[] = {2};
  const Subgroup h = subgroup_generated(z4, two);
  CHECK(is_normal(z4, h));
  const Quotient q = quotient(z4, h);
  CHECK(q.group.order() == 2);
  CHECK(is_isomorphic(q.group, cyclic(2)));
  CHECK(q.group.label(1) == "[1]");

  const auto s3 = symmetric(3);
  const int swap[] = {s3.index_of("102")};
  const Subgroup t = subgroup_generated(s3, swap);
  CHECK(t.size() == 2);
  CHECK_FALSE(is_normal(s3, t));
  CHECK(code_of([&] { (void)quotient(s3, t); }) == Errc::NotNormal);
  const int cycle[] = {s3.index_of("120")};
  CHECK(is_normal(s3, subgroup_generated(s3, cycle)));
}

TEST_CASE("every subgroup of an abelian group is normal and quotients project homomorphically") {
  for (const auto& g : {cyclic(8), direct_product(cyclic(2), cyclic(4)), direct_product(cyclic(3), cyclic(3)),
                        symmetric(3), symmetric(4)}) {
    for (const auto& h : all_subgroups(g)) {
      if (g.is_abelian()) CHECK(is_normal(g, h));
      if (!is_normal(g, h)) continue;
      const Quotient q = quotient(g, h);
      CHECK(q.group.order() * h.size() == g.order());
      const int n = static_cast<int>(g.order());
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          REQUIRE(q.coset_of[static_cast<std::size_t>(g.mul(a, b))] ==
                  q.group.mul(q.coset_of[static_cast<std::size_t>(a)], q.coset_of[static_cast<std::size_t>(b)]));
    }
  }
}

TEST_CASE("subgroup enumeration matches the subset oracle") {
  CHECK(all_subgroups(direct_product(cyclic(2), cyclic(2))).size() == 5);
  for (const auto& g : {cyclic(1), cyclic(6), cyclic(12), direct_product(cyclic(2), cyclic(2)),
                        direct_product(cyclic(2), cyclic(4)), symmetric(3),
                        direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
                        direct_product(cyclic(4), cyclic(4))})
    CHECK(static_cast<int>(all_subgroups(g).size()) == count_subgroups_by_subsets(g));
}

TEST_CASE("isomorphism") {
  CHECK_FALSE(is_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  CHECK(is_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3))));
  CHECK(is_isomorphic(symmetric(3), symmetric(3)));
  CHECK_FALSE(is_isomorphic(cyclic(6), symmetric(3)));
  CHECK_FALSE(is_isomorphic(cyclic(6), cyclic(5)));
  CHECK(is_isomorphic(direct_product(cyclic(2), cyclic(8)), direct_product(cyclic(8), cyclic(2))));
  CHECK_FALSE(is_isomorphic(direct_product(cyclic(4), cyclic(4)), direct_product(cyclic(2), cyclic(8))));
  CHECK(code_of([] { (void)is_isomorphic(cyclic(65), cyclic(65)); }) == Errc::SizeLimit);

  // the returned map really is a homomorphism
  const auto a = cyclic(12), b = direct_product(cyclic(4), cyclic(3));
  const auto f = find_isomorphism(a, b);
  REQUIRE(f.has_value());
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y)
      CHECK((*f)[static_cast<std::size_t>(a.mul(x, y))] ==
            b.mul((*f)[static_cast<std::size_t>(x)], (*f)[static_cast<std::size_t>(y)]));
}

TEST_CASE("cyclicity and element orders") {
  CHECK(is_cyclic(direct_product(cyclic(2), cyclic(3))));
  CHECK_FALSE(is_cyclic(direct_product(cyclic(2), cyclic(2))));
  CHECK(cyclic(12).element_order(8) == 3);
  CHECK(symmetric(3).element_order(symmetric(3).index_of("120")) == 3);
}
