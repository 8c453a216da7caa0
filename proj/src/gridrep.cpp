#include "qgl/gridrep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgl {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::complex<double> GridRep::point(int level, int angleIdx) const {
  double phi = baseAngles[static_cast<std::size_t>(angleIdx)];
  return std::pow(params.q, level) * std::complex<double>(std::cos(phi), std::sin(phi));
}

GridRep buildLowerHalfGridRep(const GridRepParams& params) {
  if (!(std::abs(params.q) > 0.0 && std::abs(params.q) < 1.0))
    throw std::invalid_argument("buildLowerHalfGridRep: |q| must lie in (0,1)");
  if (params.anglesPerLevel < 2)
    throw std::invalid_argument("buildLowerHalfGridRep: need at least 2 angles");
  if (params.levels < 0) throw std::invalid_argument("buildLowerHalfGridRep: levels >= 0");
  if (params.region == GridRegion::lowerHalf && params.q < 0)
    throw std::invalid_argument("buildLowerHalfGridRep: lowerHalf region requires q > 0");
  if (params.region == GridRegion::alternating && params.q > 0)
    throw std::invalid_argument("buildLowerHalfGridRep: alternating region requires q < 0");

  GridRep rep;
  rep.params = params;
  const int G = params.anglesPerLevel;
  rep.baseAngles.reserve(static_cast<std::size_t>(G));
  // Uniform grid strictly inside the open lower half circle (pi, 2 pi).
  for (int i = 0; i < G; ++i) rep.baseAngles.push_back(kPi + (i + 0.5) * kPi / G);
  return rep;
}

Eigen::MatrixXcd evalOnGridAngle(const GridRep& rep, const Element& x, int angleIdx,
                                 std::complex<double> zeta) {
  if (x.tag() != AlgebraTag::SUq2 && x.tag() != AlgebraTag::GqTheta)
    throw AlgebraError("evalOnGridAngle: SUq2/GqTheta elements only");
  const int n = rep.levelDim();
  const double q = rep.params.q;
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd gDiag(n);
  for (int k = 0; k < n; ++k) {
    gDiag(k) = rep.point(k, angleIdx);
    if (k > 0) A(k - 1, k) = std::sqrt(1.0 - std::pow(q, 2 * k));
  }
  Eigen::MatrixXcd As = A.adjoint();
  // gamma and gamma* are diagonal here, so a monomial image is a cached power of
  // the alpha shift times a diagonal built from incremental point powers.
  std::vector<Eigen::VectorXcd> gPow{Eigen::VectorXcd::Ones(n)};
  std::vector<Eigen::VectorXcd> gsPow{Eigen::VectorXcd::Ones(n)};
  std::vector<Eigen::MatrixXcd> aPow{Eigen::MatrixXcd::Identity(n, n)};
  std::vector<Eigen::MatrixXcd> asPow{Eigen::MatrixXcd::Identity(n, n)};
  auto diagPower = [](std::vector<Eigen::VectorXcd>& cache, const Eigen::VectorXcd& base,
                      int e) -> const Eigen::VectorXcd& {
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back().cwiseProduct(base));
    return cache[static_cast<std::size_t>(e)];
  };
  auto shiftPower = [](std::vector<Eigen::MatrixXcd>& cache, const Eigen::MatrixXcd& base,
                       int e) -> const Eigen::MatrixXcd& {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[static_cast<std::size_t>(e)];
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd diagAcc = Eigen::VectorXcd::Zero(n);
  for (const auto& [m, c] : x.terms()) {
    if (m.u != 0) throw AlgebraError("evalOnGridAngle: grid rep has no u generator");
    Eigen::VectorXcd d =
        diagPower(gPow, gDiag, m.g).cwiseProduct(diagPower(gsPow, gDiag.conjugate(), m.gs));
    std::complex<double> coeff = c.evalNumeric(q, zeta);
    if (m.a == 0) {
      diagAcc += coeff * d;
    } else if (m.a > 0) {
      out += coeff * (shiftPower(aPow, A, m.a) * d.asDiagonal());
    } else {
      out += coeff * (shiftPower(asPow, As, -m.a) * d.asDiagonal());
    }
  }
  out += Eigen::MatrixXcd(diagAcc.asDiagonal());
  return out;
}

double gridOperatorNorm(const GridRep& rep, const Element& x, std::complex<double> zeta) {
  double best = 0.0;
  for (int i = 0; i < rep.params.anglesPerLevel; ++i) {
    Eigen::MatrixXcd block = evalOnGridAngle(rep, x, i, zeta);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(block);
    best = std::max(best, svd.singularValues()(0));
  }
  return best;
}

std::vector<Monomial> injectivityMonomialSet(int maxAlpha, int maxGamma) {
  std::vector<Monomial> out;
  for (int a = -maxAlpha; a <= maxAlpha; ++a)
    for (int g = 0; g <= maxGamma; ++g)
      for (int gs = 0; gs <= maxGamma; ++gs) out.push_back(Monomial{AlgebraTag::SUq2, a, g, gs, 0});
  return out;
}

InjectivityResult injectivityDiagnostic(const GridRep& rep,
                                        const std::vector<Monomial>& monomials) {
  if (monomials.empty())
    throw std::invalid_argument("injectivityDiagnostic: empty monomial set");
  const int nm = static_cast<int>(monomials.size());
  const int n = rep.levelDim();
  // sigma_min of the stacked matrix B (rows: all angle blocks vectorized) via the
  // Gram matrix: sigma_min^2 = lambda_min(sum_i B_i^H B_i).
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(nm, nm);
  for (int i = 0; i < rep.params.anglesPerLevel; ++i) {
    Eigen::MatrixXcd block(n * n, nm);
    for (int c = 0; c < nm; ++c) {
      Eigen::MatrixXcd mat =
          evalOnGridAngle(rep, monomialElement(monomials[static_cast<std::size_t>(c)]), i);
      block.col(c) = Eigen::Map<Eigen::VectorXcd>(mat.data(), n * n);
    }
    gram += block.adjoint() * block;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  double lambdaMin = es.eigenvalues()(0);
  InjectivityResult r;
  r.sigmaMin = lambdaMin > 0.0 ? std::sqrt(lambdaMin) : 0.0;
  r.monomialCount = nm;
  r.rows = static_cast<long>(rep.params.anglesPerLevel) * n * n;
  return r;
}

}  // namespace qgl
