#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/chebyshev.hpp"
#include "qgl/gridrep.hpp"
#include "qgl/opnorm.hpp"
#include "qgl/parse.hpp"
#include "qgl/separation.hpp"
#include "qgl/truncrep.hpp"

#include <cmath>

using namespace qgl;

TEST_CASE("operator norm matches known values") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 1) = 2.0;
  m(1, 2) = Complex(0.0, 3.0);
  CHECK(operatorNorm(m) == doctest::Approx(3.0).epsilon(1e-12));
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(5, 5);
  CHECK(operatorNorm(id) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operatorNorm(Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(4, 4))) == 0.0);
}

TEST_CASE("truncated rep relation certificate") {
  TruncatedRepParams p;
  p.q = 0.5;
  p.levels = 6;
  p.modesPerLevel = 8;
  TruncatedRep rep = buildFullRep(p);
  CHECK(rep.dim == 7 * 8);
  CHECK(rep.certificate.interiorResidual <= 1e-12);
  CHECK(rep.certificate.boundaryDefect ==
        doctest::Approx(rep.certificate.boundaryDefectFormula).epsilon(1e-12));
  CHECK(rep.certificate.boundaryDefectFormula == doctest::Approx(1.0 - std::pow(0.5, 14)));
}

TEST_CASE("crossed truncation keeps the clock relations exact") {
  TruncatedRepParams p;
  p.q = 0.5;
  p.levels = 4;
  p.modesPerLevel = 8;
  p.theta = ClockTheta{3, 8};
  TruncatedRep rep = buildFullRep(p);
  CHECK(rep.tag == AlgebraTag::GqTheta);
  CHECK(rep.certificate.interiorResidual <= 1e-12);
}

TEST_CASE("spectrum of gamma* gamma is the q-chain") {
  TruncatedRepParams p;
  p.q = 0.5;
  p.levels = 5;
  p.modesPerLevel = 4;
  p.originVector = true;
  TruncatedRep rep = buildFullRep(p);
  auto spec = spectrumGammaStarGamma(rep);
  REQUIRE(spec.size() == 7);  // 0 plus q^{2k}, k = 0..5
  CHECK(spec.front().first == doctest::Approx(0.0));
  CHECK(spec.front().second == 1);
  for (int k = 0; k <= 5; ++k) {
    CHECK(spec[static_cast<std::size_t>(6 - k)].first ==
          doctest::Approx(std::pow(0.5, 2 * k)).epsilon(1e-14));
    CHECK(spec[static_cast<std::size_t>(6 - k)].second == 4);
  }
}

TEST_CASE("spectral scaling branches") {
  TruncatedRepParams p;
  p.q = 0.5;
  p.levels = 4;
  p.modesPerLevel = 4;
  p.originVector = true;
  TruncatedRep rep = buildFullRep(p);
  double delta = 1e-3;
  // interior eigenvalue: alpha maps the q^{2k} patch to the q^{2k-2} one
  CHECK(spectralScalingDiagnostic(rep, std::pow(0.5, 4), delta) == ScalingBranch::chainBranch);
  // top of the chain: alpha kills the q^0 patch
  CHECK(spectralScalingDiagnostic(rep, 1.0, delta) == ScalingBranch::vanishBranch);
  // bottom: raising out of the truncation window
  CHECK(spectralScalingDiagnostic(rep, std::pow(0.5, 8), delta,
                                  ScalingDirection::alphaRaising) ==
        ScalingBranch::truncationBoundary);
}

TEST_CASE("evalElement is a homomorphism into the truncation") {
  TruncatedRepParams p;
  p.q = 0.5;
  p.levels = 5;
  p.modesPerLevel = 6;
  TruncatedRep rep = buildFullRep(p);
  // avoid alpha alpha* contractions: that relation picks up the boundary defect
  Element x = parseExpression("a* g - 1/2 g^2", AlgebraTag::SUq2);
  Element y = parseExpression("a + i g", AlgebraTag::SUq2);
  Eigen::MatrixXcd mx = evalElement(rep, x), my = evalElement(rep, y);
  Eigen::MatrixXcd mxy = evalElement(rep, multiply(x, y));
  CHECK((mx * my - mxy).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK((evalElement(rep, adjoint(x)) - mx.adjoint()).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("grid rep blocks satisfy the relations and multiplication") {
  GridRepParams p;
  p.q = 0.5;
  p.levels = 5;
  p.anglesPerLevel = 4;
  GridRep rep = buildLowerHalfGridRep(p);
  Element x = parseExpression("a g - g* a* + 1/2", AlgebraTag::SUq2);
  Element y = parseExpression("g g* + a", AlgebraTag::SUq2);
  for (int i = 0; i < p.anglesPerLevel; ++i) {
    Eigen::MatrixXcd mx = evalOnGridAngle(rep, x, i), my = evalOnGridAngle(rep, y, i);
    Eigen::MatrixXcd mxy = evalOnGridAngle(rep, multiply(x, y), i);
    CHECK((mx * my - mxy).cwiseAbs().maxCoeff() <= 1e-13);
  }
  // region gating
  GridRepParams bad = p;
  bad.q = -0.5;
  CHECK_THROWS(buildLowerHalfGridRep(bad));
  bad.region = GridRegion::alternating;
  CHECK_NOTHROW(buildLowerHalfGridRep(bad));
}

TEST_CASE("chebyshev approximation quality") {
  ChebPoly p = chebyshevApprox(rampFunction(0.0), 64);
  CHECK(p.gridSupError <= 0.02);
  CHECK(p.eval(1.0) == doctest::Approx(1.0).epsilon(0.02));
  CHECK(std::abs(p.eval(-0.7)) <= 0.02);
  ChebPoly shifted = chebyshevApprox(rampFunction(0.75), 64);
  CHECK(std::abs(shifted.eval(0.5)) <= 0.02);
  CHECK(shifted.eval(1.0) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("chebyshevOfElement matches scalar clenshaw on the spectrum") {
  ChebPoly p = chebyshevApprox(rampFunction(0.0), 16);
  Element t = imaginaryPartOfGamma(AlgebraTag::SUq2);
  Element x = chebyshevOfElement(p, t);
  TruncatedRepParams rp;
  rp.q = 0.5;
  rp.levels = 4;
  rp.modesPerLevel = 8;
  TruncatedRep rep = buildFullRep(rp);
  Eigen::MatrixXcd mt = evalElement(rep, t);
  Eigen::MatrixXcd mx = evalElement(rep, x);
  // pi(x) = p(pi(t)) since pi is a homomorphism; compare on a vector
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(rep.dim).normalized();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mt);
  Eigen::MatrixXcd pOfT = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
  Eigen::VectorXd evals = es.eigenvalues();
  Eigen::VectorXd mapped(rep.dim);
  for (int i = 0; i < rep.dim; ++i) mapped(i) = p.eval(evals(i));
  pOfT = es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint();
  CHECK((mx - pOfT).cwiseAbs().maxCoeff() <= 1e-10);
  (void)v;
}

TEST_CASE("small separation experiment separates") {
  SeparationParams p;
  p.q = 0.5;
  p.levels = 8;
  p.modesPerLevel = 32;
  p.anglesPerLevel = 64;
  p.chebDegree = 48;
  SeparationResult res = normSeparationExperiment(p);
  CHECK(res.witness.fullNormOperator ==
        doctest::Approx(res.witness.fullNormSpectral).epsilon(1e-8));
  CHECK(res.witness.fullNormOperator >= 0.9);
  CHECK(res.witness.restrictedNorm <= 0.05);
  CHECK(res.gammaControl.fullNormOperator ==
        doctest::Approx(res.gammaControl.restrictedNorm).epsilon(1e-10));
  CHECK(res.injectivity.sigmaMin > 1e-6);
  CHECK(res.separated);
}
