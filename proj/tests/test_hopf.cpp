#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/corpus.hpp"
#include "qgl/hopf.hpp"

using namespace qgl;

namespace {

void checkHopfAxioms(const Element& x) {
  AlgebraTag t = x.tag();
  // counit axiom
  CHECK(counitAxiomLeft(x) == x);
  CHECK(counitAxiomRight(x) == x);
  // antipode axiom
  Element expected = scalarElement(t, counit(x));
  CHECK(antipodeAxiomLeft(x) == expected);
  CHECK(antipodeAxiomRight(x) == expected);
  // coassociativity
  TensorElement d = coproduct(x);
  CHECK(coproductLeftLeg(d) == coproductRightLeg(d));
}

}  // namespace

TEST_CASE("coproduct closed forms") {
  AlgebraTag t = AlgebraTag::SUq2;
  Element a = generatorElement(t, Gen::A), g = generatorElement(t, Gen::G);
  Element as = generatorElement(t, Gen::AStar), gs = generatorElement(t, Gen::GStar);

  // Delta(alpha) = alpha (x) alpha - q gamma* (x) gamma
  TensorElement da = tensorAdd(
      tensorOf(a, a), tensorScale(LaurentCoefficient::qPower(1, GaussianRational(-1)),
                                  tensorOf(gs, g)));
  CHECK(coproduct(a) == da);

  // Delta(gamma) = gamma (x) alpha + alpha* (x) gamma
  TensorElement dg = tensorAdd(tensorOf(g, a), tensorOf(as, g));
  CHECK(coproduct(g) == dg);

  // Delta(u) = u (x) u
  Element u = generatorElement(AlgebraTag::GqTheta, Gen::U);
  CHECK(coproduct(u) == tensorOf(u, u));
}

TEST_CASE("coproduct is a *-homomorphism on random pairs") {
  for (AlgebraTag t : {AlgebraTag::SUq2, AlgebraTag::GqTheta}) {
    DeterministicRng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
      Element x = randomElement(t, rng, 3, 3);
      Element y = randomElement(t, rng, 3, 3);
      CHECK(coproduct(multiply(x, y)) == tensorMultiply(coproduct(x), coproduct(y)));
      CHECK(coproduct(adjoint(x)) == tensorAdjoint(coproduct(x)));
    }
  }
}

TEST_CASE("hopf axioms on all monomials of degree <= 3") {
  for (AlgebraTag t : {AlgebraTag::SUq2, AlgebraTag::GqTheta}) {
    for (const Monomial& m : monomialsUpToDegree(t, 3)) checkHopfAxioms(monomialElement(m));
  }
}

TEST_CASE("hopf axioms on random elements") {
  for (AlgebraTag t : {AlgebraTag::SUq2, AlgebraTag::GqTheta}) {
    DeterministicRng rng(47);
    for (int trial = 0; trial < 30; ++trial) checkHopfAxioms(randomElement(t, rng, 4, 3));
  }
}

TEST_CASE("antipode closed forms and anti-homomorphism") {
  AlgebraTag t = AlgebraTag::SUq2;
  Element a = generatorElement(t, Gen::A), g = generatorElement(t, Gen::G);
  CHECK(antipode(a) == adjoint(a));
  CHECK(antipode(g) == scale(LaurentCoefficient::qPower(1, GaussianRational(-1)), g));
  DeterministicRng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    Element x = randomElement(t, rng, 3, 3);
    Element y = randomElement(t, rng, 3, 3);
    CHECK(antipode(multiply(x, y)) == multiply(antipode(y), antipode(x)));
    // S(S(x)*)* = x for Hopf *-algebras
    CHECK(adjoint(antipode(adjoint(antipode(x)))) == x);
  }
}

TEST_CASE("counit is a character") {
  for (AlgebraTag t : {AlgebraTag::SUq2, AlgebraTag::GqTheta}) {
    DeterministicRng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
      Element x = randomElement(t, rng, 3, 3);
      Element y = randomElement(t, rng, 3, 3);
      CHECK(counit(multiply(x, y)) == counit(x) * counit(y));
    }
    CHECK(counit(generatorElement(t, Gen::G)).isZero());
    CHECK(counit(generatorElement(t, Gen::A)) == LaurentCoefficient::one());
  }
}

TEST_CASE("torus-invariant part") {
  AlgebraTag t = AlgebraTag::SUq2;
  Element x(t);
  x.add(Monomial{t, 1, 0, 1, 0}, LaurentCoefficient::one());  // tDegree 0
  x.add(Monomial{t, 1, 0, 0, 0}, LaurentCoefficient::one());  // tDegree 1
  x.add(Monomial{t, 0, 2, 2, 0}, LaurentCoefficient::one());  // tDegree 0
  Element inv = invariantPart(x);
  CHECK(inv.size() == 2);
  for (const auto& [m, c] : inv.terms()) CHECK(tDegree(m) == 0);
  // invariantPart agrees with the coaction characterization
  CHECK(circleInvarianceHolds(inv));
  CHECK_FALSE(circleInvarianceHolds(x));
}

TEST_CASE("circle quotient is a hopf *-homomorphism") {
  AlgebraTag t = AlgebraTag::GqTheta;
  DeterministicRng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    Element x = randomElement(t, rng, 3, 3);
    Element y = randomElement(t, rng, 3, 3);
    CHECK(quotientToCircle(multiply(x, y)) ==
          multiply(quotientToCircle(x), quotientToCircle(y)));
    CHECK(quotientToCircle(adjoint(x)) == adjoint(quotientToCircle(x)));
  }
  CHECK(quotientToCircle(generatorElement(t, Gen::G)).isZero());
}
