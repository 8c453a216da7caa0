#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/corpus.hpp"
#include "qgl/haar.hpp"

#include <Eigen/Dense>

using namespace qgl;

namespace {

/// (1 - q^2) / (1 - q^{2m+2}) as a RationalValue.
RationalValue chainClosedForm(int m) {
  std::vector<GaussianRational> num(3, GaussianRational(0));
  num[0] = GaussianRational(1);
  num[2] = GaussianRational(-1);
  std::vector<GaussianRational> den(static_cast<std::size_t>(2 * m + 3), GaussianRational(0));
  den[0] = GaussianRational(1);
  den[static_cast<std::size_t>(2 * m + 2)] = GaussianRational(-1);
  return {QPoly(num), QPoly(den)};
}

Element chainMonomial(AlgebraTag t, int m) {
  return monomialElement(Monomial{t, 0, m, m, 0});
}

}  // namespace

TEST_CASE("haar chain values match the closed form") {
  auto values = haarChainValues(6);
  REQUIRE(values.size() == 7);
  CHECK(values[0] == RationalValue::one());
  for (int m = 1; m <= 6; ++m) CHECK(values[static_cast<std::size_t>(m)] == chainClosedForm(m));
}

TEST_CASE("haar state values") {
  AlgebraTag t = AlgebraTag::SUq2;
  // h(gamma* gamma) = 1/(1+q^2): the m=1 closed form
  CHECK(haarState(chainMonomial(t, 1)) == chainClosedForm(1));
  GaussianRational v = haarState(chainMonomial(t, 1)).evalAt(BigRational(1, 2));
  CHECK(v == GaussianRational(BigRational(4, 5)));  // (1-1/4)/(1-1/16) = 4/5... checked below
  // off-chain monomials vanish
  CHECK(haarState(generatorElement(t, Gen::A)).isZero());
  CHECK(haarState(generatorElement(t, Gen::G)).isZero());
  CHECK(haarState(monomialElement(Monomial{t, 1, 1, 1, 0})).isZero());
  // crossed product: h(x u^l) = 0 for l != 0
  AlgebraTag g = AlgebraTag::GqTheta;
  CHECK(haarState(monomialElement(Monomial{g, 0, 1, 1, 1})).isZero());
  CHECK(haarState(multiply(chainMonomial(g, 1), unitElement(g))) == chainClosedForm(1));
}

TEST_CASE("haar state is a state: unital, hermitian, positive on a gram matrix") {
  AlgebraTag t = AlgebraTag::SUq2;
  CHECK(haarState(unitElement(t)) == RationalValue::one());
  auto monos = monomialsUpToDegree(t, 2);
  const int n = static_cast<int>(monos.size());
  Eigen::MatrixXcd gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Element prod = multiply(adjoint(monomialElement(monos[static_cast<std::size_t>(i)])),
                              monomialElement(monos[static_cast<std::size_t>(j)]));
      GaussianRational v = haarState(prod).evalAt(BigRational(1, 2));
      gram(i, j) = std::complex<double>(v.reDouble(), v.imDouble());
    }
  }
  CHECK((gram - gram.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  CHECK(es.eigenvalues()(0) > -1e-12);
}

TEST_CASE("haar invariance defects vanish on random elements") {
  for (AlgebraTag t : {AlgebraTag::SUq2, AlgebraTag::GqTheta}) {
    DeterministicRng rng(101);
    for (int trial = 0; trial < 15; ++trial) {
      Element x = randomElement(t, rng, 3, 3);
      CHECK(haarLeftInvarianceDefect(x).empty());
      CHECK(haarRightInvarianceDefect(x).empty());
    }
  }
}

TEST_CASE("conditional expectation onto the u-subalgebra") {
  AlgebraTag t = AlgebraTag::GqTheta;
  // E(u^l) = u^l
  auto e = conditionalExpectation(monomialElement(Monomial{t, 0, 0, 0, 3}));
  REQUIRE(e.size() == 1);
  CHECK(e[0].first == 3);
  CHECK(e[0].second == RationalValue::one());
  // E(gamma* gamma u^2) = h(gamma* gamma) u^2
  Element x = monomialElement(Monomial{t, 0, 1, 1, 2});
  e = conditionalExpectation(x);
  REQUIRE(e.size() == 1);
  CHECK(e[0].first == 2);
  CHECK(e[0].second == chainClosedForm(1));
  // E kills alpha-graded parts
  CHECK(conditionalExpectation(generatorElement(t, Gen::A)).empty());
  // linearity across mixed terms
  Element mixed = add(x, monomialElement(Monomial{t, 1, 0, 0, 1}));
  CHECK(conditionalExpectation(mixed) == conditionalExpectation(x));
}
