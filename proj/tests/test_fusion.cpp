#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/fusion.hpp"

using namespace qgl;

TEST_CASE("tensor rules") {
  FusionRing su2 = makeFusionRing(FusionKind::su2spin);
  // spin 1/2 (x) spin 1/2 = trivial + spin 1, dimension check 2*2 = 1 + 3
  CHECK(su2.tensor({1, 0}, {1, 0}) == std::vector<FusionLabel>{{0, 0}, {2, 0}});
  CHECK(su2.tensor({2, 0}, {1, 0}) == std::vector<FusionLabel>{{1, 0}, {3, 0}});
  int dimLhs = (2 + 1) * (1 + 1), dimRhs = 0;
  for (const auto& l : su2.tensor({2, 0}, {1, 0})) dimRhs += l.s + 1;
  CHECK(dimLhs == dimRhs);

  FusionRing ints = makeFusionRing(FusionKind::integers);
  CHECK(ints.tensor({0, 2}, {0, 3}) == std::vector<FusionLabel>{{0, 5}});

  FusionRing c5 = makeFusionRing(FusionKind::cyclic, 5);
  CHECK(c5.tensor({0, 3}, {0, 4}) == std::vector<FusionLabel>{{0, 2}});

  FusionRing prod = makeFusionRing(FusionKind::productSu2Int);
  CHECK(prod.tensor({1, 5}, {1, -5}) == std::vector<FusionLabel>{{0, 0}, {2, 0}});
}

TEST_CASE("ring invariants") {
  for (auto kind : {FusionKind::su2spin, FusionKind::integers, FusionKind::productSu2Int}) {
    FusionRing ring = makeFusionRing(kind, 0);
    std::vector<FusionLabel> samples = {{0, 0}};
    if (kind == FusionKind::su2spin) samples = {{0, 0}, {1, 0}, {4, 0}};
    if (kind == FusionKind::integers) samples = {{0, 0}, {0, 3}, {0, -2}};
    if (kind == FusionKind::productSu2Int) samples = {{0, 0}, {1, 4}, {3, -1}};
    for (const auto& a : samples) {
      // unit (x) a = {a}
      CHECK(ring.tensor(ring.unit(), a) == std::vector<FusionLabel>{a});
      // conjugate is an involution
      CHECK(ring.conjugate(ring.conjugate(a)) == a);
      // a (x) conj(a) contains the unit
      bool hasUnit = false;
      for (const auto& c : ring.tensor(a, ring.conjugate(a)))
        hasUnit = hasUnit || c == ring.unit();
      CHECK(hasUnit);
      // commutative as multisets
      for (const auto& b : samples) CHECK(ring.tensor(a, b) == ring.tensor(b, a));
    }
  }
  CHECK(makeFusionRing(FusionKind::integers).conjugate({0, 3}) == FusionLabel{0, -3});
  CHECK(makeFusionRing(FusionKind::productSu2Int).conjugate({1, 4}) == FusionLabel{1, -4});
}

TEST_CASE("cyclic closure is finite and sound") {
  FusionRing c6 = makeFusionRing(FusionKind::cyclic, 6);
  auto res = localFinitenessCheck(c6, {{0, 2}}, 100);
  CHECK(res.finite);
  CHECK(res.closure == std::set<FusionLabel>{{0, 0}, {0, 2}, {0, 4}});
  CHECK(closureIsSound(c6, res.closure));
  // full group from a generator coprime to 6
  auto all = localFinitenessCheck(c6, {{0, 1}}, 100);
  CHECK(all.finite);
  CHECK(all.closure.size() == 6);
  CHECK(closureIsSound(c6, all.closure));
}

TEST_CASE("infinite directions exceed the cap with a growing chain") {
  FusionRing prod = makeFusionRing(FusionKind::productSu2Int);
  auto res = localFinitenessCheck(prod, {{0, 1}}, 10000);
  CHECK_FALSE(res.finite);
  CHECK(static_cast<int>(res.closure.size()) > 10000);
  REQUIRE(res.growthChain.size() >= 2);
  for (std::size_t i = 1; i < res.growthChain.size(); ++i)
    CHECK(res.growthChain[i] > res.growthChain[i - 1]);

  FusionRing su2 = makeFusionRing(FusionKind::su2spin);
  auto spin = localFinitenessCheck(su2, {{1, 0}}, 500);
  CHECK_FALSE(spin.finite);

  FusionRing ints = makeFusionRing(FusionKind::integers);
  auto zres = localFinitenessCheck(ints, {{0, 1}}, 1000);
  CHECK_FALSE(zres.finite);
}

TEST_CASE("monotonicity in the generator set") {
  FusionRing c6 = makeFusionRing(FusionKind::cyclic, 6);
  auto small = localFinitenessCheck(c6, {{0, 2}}, 100);
  auto large = localFinitenessCheck(c6, {{0, 2}, {0, 3}}, 100);
  CHECK(large.finite);
  for (const auto& l : small.closure) CHECK(large.closure.count(l) == 1);
}

TEST_CASE("determinism of the visit order") {
  FusionRing prod = makeFusionRing(FusionKind::productSu2Int);
  auto r1 = localFinitenessCheck(prod, {{1, 1}}, 300);
  auto r2 = localFinitenessCheck(prod, {{1, 1}}, 300);
  CHECK(r1.visitOrder == r2.visitOrder);
  CHECK(r1.growthChain == r2.growthChain);
}

TEST_CASE("errors") {
  FusionRing c6 = makeFusionRing(FusionKind::cyclic, 6);
  CHECK_THROWS_AS(localFinitenessCheck(c6, {}, 10), FusionError);
  CHECK_THROWS_AS(makeFusionRing(FusionKind::cyclic, 0), FusionError);
  FusionRing su2 = makeFusionRing(FusionKind::su2spin);
  CHECK_THROWS_AS(su2.validate({-1, 0}), FusionError);
}
