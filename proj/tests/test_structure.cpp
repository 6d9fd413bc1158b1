#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fuskit/error.hpp"
#include "fuskit/families.hpp"
#include "fuskit/structure.hpp"

using namespace fuskit;

namespace {

std::vector<int> ids(const FusionRing& r, std::initializer_list<const char*> labels) {
  std::vector<int> out;
  for (const char* l : labels) out.push_back(r.index_of(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FusionRing> zoo() {
  return {fibonacci(),
          psu2_6(),
          tambara_yamagami(named_cyclic(2)),
          tambara_yamagami(named_product(named_cyclic(2), named_cyclic(2))),
          near_group(named_cyclic(2), 1),
          fib_extension(named_cyclic(3)),
          fib_extension(named_symmetric(3)),
          su2_level(4),
          su2_level(5),
          n_ising(2),
          pointed(named_symmetric(3)),
          deligne_product(psu2_6(), pointed(named_cyclic(3))),
          deligne_product(tambara_yamagami(named_cyclic(2)), fibonacci())};
}

}  // namespace

TEST_CASE("invertibles") {
  const auto psu = psu2_6();
  const auto inv = invertibles(psu);
  CHECK(inv.group.order() == 2);
  CHECK(inv.basis_index == ids(psu, {"1", "d"}));
  CHECK(invertibles(fibonacci()).group.order() == 1);
  const auto s3 = pointed(named_symmetric(3));
  CHECK(is_isomorphic(invertibles(s3).group, symmetric(3)));
}

TEST_CASE("action orbits and stabilizers") {
  const auto psu = psu2_6();
  const auto data = action(psu);
  const int x = psu.index_of("X");
  CHECK(data.orbits[static_cast<std::size_t>(data.orbit_of[static_cast<std::size_t>(x)])] == ids(psu, {"X", "Y"}));
  CHECK(data.stabilizers[static_cast<std::size_t>(x)].size() == 1);
  CHECK(act(psu, psu.index_of("d"), x) == psu.index_of("Y"));

  const auto z4 = pointed(named_cyclic(4));
  const auto za = action(z4);
  CHECK(za.orbits.size() == 1);
  for (const auto& s : za.stabilizers) CHECK(s.size() == 1);

  const auto ty = tambara_yamagami(named_cyclic(4));
  CHECK(action(ty).stabilizers[static_cast<std::size_t>(ty.index_of("X"))].size() == 4);
}

TEST_CASE("stabilizers conjugate along the action") {
  for (const auto& ring : zoo()) {
    const auto data = action(ring);
    const auto& g = data.invertibles.group;
    for (int h = 0; h < static_cast<int>(g.order()); ++h)
      for (int i = 0; i < static_cast<int>(ring.rank()); ++i) {
        const int j = act(ring, data.invertibles.basis_index[static_cast<std::size_t>(h)], i);
        std::vector<int> conj;
        for (int s : data.stabilizers[static_cast<std::size_t>(i)].members) conj.push_back(g.mul(g.mul(h, s), g.inverse(h)));
        std::sort(conj.begin(), conj.end());
        REQUIRE(conj == data.stabilizers[static_cast<std::size_t>(j)].members);
      }
    // orbits partition the basis and the invertibles are a union of orbits
    std::vector<int> seen(ring.rank(), 0);
    for (const auto& o : data.orbits)
      for (int i : o) ++seen[static_cast<std::size_t>(i)];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    for (const auto& o : data.orbits) {
      const auto inv = std::count_if(o.begin(), o.end(), [&](int i) { return is_invertible(ring, i); });
      CHECK((inv == 0 || inv == static_cast<long>(o.size())));
    }
  }
}

TEST_CASE("pointed and adjoint subrings") {
  const auto ty = tambara_yamagami(named_cyclic(2));
  CHECK(adjoint_subring(ty).basis == ids(ty, {"0", "1"}));
  const auto psu = psu2_6();
  CHECK(adjoint_subring(psu) == whole_ring(psu));
  CHECK(pointed_subring(fibonacci()).basis == std::vector<int>{0});
  for (const auto& ring : zoo()) {
    CHECK(is_subring(ring, pointed_subring(ring).basis));
    CHECK(is_subring(ring, adjoint_subring(ring).basis));
  }
}

TEST_CASE("subring closure") {
  const auto fib = fibonacci();
  CHECK(subring_closure(fib, {1}) == whole_ring(fib));
  CHECK(subring_closure(fib, {}).basis == std::vector<int>{0});
  const auto f2 = fib_extension(named_cyclic(2));
  CHECK(subring_closure(f2, {f2.index_of("Y0")}).basis == ids(f2, {"d0", "Y0"}));
  CHECK_FALSE(is_subring(f2, ids(f2, {"d0", "Y1"})));
  try {
    (void)extract_subring(f2, Subring{ids(f2, {"d0", "Y1"})}, "bad");
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotClosed);
  }
  const auto sub = extract_subring(f2, Subring{ids(f2, {"d0", "Y0"})}, "fib");
  CHECK(validate(sub).pass());
  CHECK(find_ring_isomorphism(sub, fib).has_value());
}

TEST_CASE("universal grading examples") {
  const auto ty = tambara_yamagami(named_cyclic(2));
  const auto g = universal_grading(ty);
  CHECK(g.group.order() == 2);
  CHECK(g.components[static_cast<std::size_t>(g.trivial)] == ids(ty, {"0", "1"}));
  CHECK(g.components[static_cast<std::size_t>(1 - g.trivial)] == ids(ty, {"X"}));
  CHECK(g.group.label(1) == "X");
  CHECK(universal_grading(psu2_6()).group.order() == 1);
  CHECK(universal_grading(near_group(named_cyclic(2), 1)).group.order() == 1);
  CHECK(is_isomorphic(universal_grading(n_ising(3)).group, cyclic(8)));
}

TEST_CASE("universal grading invariants") {
  for (const auto& ring : zoo()) {
    const auto g = universal_grading(ring);
    CHECK(is_grading(ring, g));
    CHECK(g.components[static_cast<std::size_t>(g.trivial)] == adjoint_subring(ring).basis);
    const auto dims = graded_component_dims(g, ring);
    for (const auto& d : dims) CHECK(approx_equal(d, dims.front()));
    const RealValue total = RealValue(QuadraticReal(static_cast<std::int64_t>(g.group.order()))) * dims.front();
    CHECK(approx_equal(total, fpdim_ring(ring)));
  }
}

TEST_CASE("graded component dimensions") {
  const auto ty = tambara_yamagami(named_cyclic(2));
  for (const auto& d : graded_component_dims(universal_grading(ty), ty)) CHECK(d.exact() == QuadraticReal(2));
  const QuadraticReal fib_dim(Rational(5, 2), Rational(1, 2), 5);
  const auto fib = fibonacci();
  CHECK(graded_component_dims(universal_grading(fib), fib).front().exact() == fib_dim);
  const auto f3 = fib_extension(named_cyclic(3));
  const auto dims = graded_component_dims(universal_grading(f3), f3);
  CHECK(dims.size() == 3);
  for (const auto& d : dims) CHECK(d.exact() == fib_dim);
}

TEST_CASE("a coarser grading is rejected by is_grading when inconsistent") {
  const auto ty = tambara_yamagami(named_cyclic(2));
  auto g = universal_grading(ty);
  std::swap(g.component_of[0], g.component_of[2]);
  CHECK_FALSE(is_grading(ty, g));
}

TEST_CASE("commutator subrings") {
  const auto psu = psu2_6();
  CHECK(commutator_subring(psu, whole_ring(psu)) == whole_ring(psu));
  const auto ty = tambara_yamagami(named_cyclic(2));
  CHECK(commutator_subring(ty, Subring{ids(ty, {"0", "1"})}) == whole_ring(ty));
  const auto f2 = fib_extension(named_cyclic(2));
  const Subring pt = pointed_subring(f2);
  CHECK(commutator_set(f2, pt) == pt.basis);
  CHECK(commutator_subring(f2, pt) == pt);
}
