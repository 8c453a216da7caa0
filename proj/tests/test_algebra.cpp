#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/algebra.hpp"
#include "qgl/corpus.hpp"

#include <vector>

using namespace qgl;

namespace {

Element gen(AlgebraTag tag, Gen g) { return generatorElement(tag, g); }

Element word(AlgebraTag tag, const std::vector<Gen>& letters) {
  Element e = unitElement(tag);
  for (Gen g : letters) e = multiply(e, gen(tag, g));
  return e;
}

}  // namespace

TEST_CASE("defining relations in normal form") {
  AlgebraTag t = AlgebraTag::SUq2;
  Element a = gen(t, Gen::A), as = gen(t, Gen::AStar), g = gen(t, Gen::G), gs = gen(t, Gen::GStar);

  // alpha alpha* = 1 - q^2 gamma gamma*
  Element rhs = unitElement(t);
  rhs.add(Monomial{t, 0, 1, 1, 0}, LaurentCoefficient::qPower(2, GaussianRational(-1)));
  CHECK(multiply(a, as) == rhs);

  // alpha* alpha = 1 - gamma* gamma
  Element rhs2 = unitElement(t);
  rhs2.add(Monomial{t, 0, 1, 1, 0}, LaurentCoefficient::scalar(GaussianRational(-1)));
  CHECK(multiply(as, a) == rhs2);

  // gamma gamma* = gamma* gamma
  CHECK(multiply(g, gs) == multiply(gs, g));
  // q gamma* alpha = alpha gamma*, q gamma alpha = alpha gamma
  LaurentCoefficient q = LaurentCoefficient::qPower(1);
  CHECK(scale(q, multiply(gs, a)) == multiply(a, gs));
  CHECK(scale(q, multiply(g, a)) == multiply(a, g));
}

TEST_CASE("crossed product relations") {
  AlgebraTag t = AlgebraTag::GqTheta;
  Element a = gen(t, Gen::A), g = gen(t, Gen::G), u = gen(t, Gen::U), us = gen(t, Gen::UStar);
  // u* gamma u = zeta gamma
  CHECK(multiply(multiply(us, g), u) == scale(LaurentCoefficient::zetaPower(1), g));
  // u* alpha u = alpha
  CHECK(multiply(multiply(us, a), u) == a);
  // u u* = u* u = 1
  CHECK(multiply(u, us) == unitElement(t));
  CHECK(multiply(us, u) == unitElement(t));
}

TEST_CASE("torus relation") {
  AlgebraTag t = AlgebraTag::Torus;
  Element v = gen(t, Gen::V), w = gen(t, Gen::W);
  // w v = zeta v w
  CHECK(multiply(w, v) == scale(LaurentCoefficient::zetaPower(1), multiply(v, w)));
}

TEST_CASE("associativity on random words") {
  for (AlgebraTag t : {AlgebraTag::SUq2, AlgebraTag::GqTheta, AlgebraTag::Torus}) {
    DeterministicRng rng(7);
    auto gens = algebraGenerators(t);
    for (int trial = 0; trial < 40; ++trial) {
      Element x = randomElement(t, rng, 3, 3);
      Element y = randomElement(t, rng, 3, 3);
      Element z = randomElement(t, rng, 3, 3);
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
    (void)gens;
  }
}

TEST_CASE("canonical form independent of multiplication order") {
  // Random words of letters, multiplied left-to-right vs right-to-left
  // associations, must land on the same normal form.
  AlgebraTag t = AlgebraTag::GqTheta;
  DeterministicRng rng(11);
  auto gens = algebraGenerators(t);
  for (int trial = 0; trial < 60; ++trial) {
    int len = rng.uniformInt(1, 8);
    std::vector<Gen> letters;
    for (int i = 0; i < len; ++i)
      letters.push_back(gens[static_cast<std::size_t>(rng.uniformInt(0, static_cast<int>(gens.size()) - 1))]);
    Element fwd = word(t, letters);
    Element bwd = unitElement(t);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      bwd = multiply(gen(t, *it), bwd);
    CHECK(fwd == bwd);
  }
}

TEST_CASE("adjoint is an involutive conjugate-linear anti-homomorphism") {
  for (AlgebraTag t : {AlgebraTag::SUq2, AlgebraTag::GqTheta, AlgebraTag::Torus}) {
    DeterministicRng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      Element x = randomElement(t, rng, 3, 3);
      Element y = randomElement(t, rng, 3, 3);
      CHECK(adjoint(adjoint(x)) == x);
      CHECK(adjoint(multiply(x, y)) == multiply(adjoint(y), adjoint(x)));
      LaurentCoefficient c = LaurentCoefficient::term(1, 0, GaussianRational::i());
      CHECK(adjoint(scale(c, x)) == scale(c.conj(), adjoint(x)));
    }
  }
}

TEST_CASE("adjoint closed forms") {
  AlgebraTag t = AlgebraTag::SUq2;
  // (alpha gamma)* = q alpha* gamma*
  Element ag = multiply(gen(t, Gen::A), gen(t, Gen::G));
  Element expected(t);
  expected.add(Monomial{t, -1, 0, 1, 0}, LaurentCoefficient::qPower(1));
  CHECK(adjoint(ag) == expected);
}

TEST_CASE("unit and zero behavior") {
  for (AlgebraTag t : {AlgebraTag::SUq2, AlgebraTag::GqTheta, AlgebraTag::Torus, AlgebraTag::Circle}) {
    DeterministicRng rng(5);
    Element x = randomElement(t, rng, 3, 3);
    CHECK(multiply(unitElement(t), x) == x);
    CHECK(multiply(x, unitElement(t)) == x);
    CHECK(multiply(zeroElement(t), x).isZero());
    CHECK(add(x, negate(x)).isZero());
  }
}

TEST_CASE("tag mismatch throws") {
  Element x = unitElement(AlgebraTag::SUq2);
  Element y = unitElement(AlgebraTag::Torus);
  CHECK_THROWS_AS(multiply(x, y), AlgebraError);
  CHECK_THROWS_AS(generatorElement(AlgebraTag::SUq2, Gen::U), AlgebraError);
  CHECK_THROWS_AS(generatorElement(AlgebraTag::Torus, Gen::G), AlgebraError);
}

TEST_CASE("tensor multiply is leg-wise") {
  AlgebraTag t = AlgebraTag::SUq2;
  Element a = gen(t, Gen::A), g = gen(t, Gen::G);
  TensorElement x = tensorOf(a, g);
  TensorElement y = tensorOf(g, a);
  TensorElement xy = tensorMultiply(x, y);
  CHECK(xy == tensorOf(multiply(a, g), multiply(g, a)));
  CHECK(tensorAdjoint(x) == tensorOf(adjoint(a), adjoint(g)));
}
