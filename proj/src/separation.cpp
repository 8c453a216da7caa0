#include "qgl/separation.hpp"

#include "qgl/opnorm.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace qgl {

Element imaginaryPartOfGamma(AlgebraTag tag) {
  Element g = generatorElement(tag, Gen::G);
  Element gs = generatorElement(tag, Gen::GStar);
  // 1/(2i) = -i/2
  GaussianRational half(BigRational(0), BigRational(-1, 2));
  return scale(LaurentCoefficient::scalar(half), subtract(g, gs));
}

Element chebyshevOfElement(const ChebPoly& p, const Element& t) {
  const AlgebraTag tag = t.tag();
  const int n = p.degree();
  if (n < 0) return zeroElement(tag);
  Element b1 = zeroElement(tag);
  Element b2 = zeroElement(tag);
  auto coeff = [&](int k) {
    return LaurentCoefficient::scalar(GaussianRational(rationalFromDouble(p.coeffs[k])));
  };
  LaurentCoefficient two = LaurentCoefficient::scalar(GaussianRational(2));
  for (int k = n; k >= 1; --k) {
    Element b0 = add(scalarElement(tag, coeff(k)), subtract(multiply(scale(two, t), b1), b2));
    b2 = b1;
    b1 = b0;
  }
  return add(scalarElement(tag, coeff(0)), subtract(multiply(t, b1), b2));
}

double separationRampThreshold(double q) { return q > 0 ? 0.0 : (1.0 + std::abs(q)) / 2.0; }

namespace {

/// sup of |f| over the full truncated point spectrum {q^k w^j : k <= K, w^N = 1},
/// with f applied to the imaginary part of the point.
double spectralSup(const std::function<double(double)>& f, double q, int levels, int modes) {
  double sup = 0.0;
  for (int k = 0; k <= levels; ++k) {
    double r = std::pow(q, k);
    for (int j = 0; j < modes; ++j) {
      double im = r * std::sin(2.0 * M_PI * j / modes);
      sup = std::max(sup, std::abs(f(im)));
    }
  }
  return sup;
}

double restrictedSup(const std::function<double(double)>& f, const GridRep& rep) {
  double sup = 0.0;
  for (int k = 0; k <= rep.params.levels; ++k)
    for (int i = 0; i < rep.params.anglesPerLevel; ++i)
      sup = std::max(sup, std::abs(f(rep.point(k, i).imag())));
  return sup;
}

}  // namespace

SeparationResult normSeparationExperiment(const SeparationParams& params) {
  SeparationResult res;
  res.params = params;
  res.rampThreshold = separationRampThreshold(params.q);

  auto ramp = rampFunction(res.rampThreshold);
  ChebPoly p = chebyshevApprox(ramp, params.chebDegree);
  res.chebSupError = p.gridSupError;

  TruncatedRepParams trp;
  trp.q = params.q;
  trp.levels = params.levels;
  trp.modesPerLevel = params.modesPerLevel;
  TruncatedRep full = buildFullRep(trp);

  GridRepParams grp;
  grp.q = params.q;
  grp.levels = params.levels;
  grp.anglesPerLevel = params.anglesPerLevel;
  grp.region = params.q > 0 ? GridRegion::lowerHalf : GridRegion::alternating;
  GridRep grid = buildLowerHalfGridRep(grp);

  // Witness: the ramp polynomial in Im(gamma). The expanded normal form of a
  // high-degree Chebyshev polynomial has huge cancelling coefficients, so the
  // operator norms are computed by Clenshaw on the evaluated generator instead.
  // Im(gamma) preserves levels, so p acts blockwise on the full truncation.
  Element t = imaginaryPartOfGamma(AlgebraTag::SUq2);
  auto pEval = [&](double s) { return p.eval(s); };
  res.witness.label = "chebyshevRampOfImGamma";
  res.witness.fullNormSpectral = spectralSup(pEval, params.q, params.levels, params.modesPerLevel);
  Eigen::MatrixXcd tFull(evalElementSparse(full, t, Bindings{params.q, {1.0, 0.0}}));
  const int N = params.modesPerLevel;
  double fullNorm = 0.0;
  for (int k = 0; k <= params.levels; ++k) {
    Eigen::MatrixXcd block = tFull.block(k * N, k * N, N, N);
    fullNorm = std::max(fullNorm, operatorNorm(matrixClenshaw(p, block)));
  }
  res.witness.fullNormOperator = fullNorm;
  double restricted = 0.0;
  for (int i = 0; i < params.anglesPerLevel; ++i) {
    Eigen::MatrixXcd tb = evalOnGridAngle(grid, t, i);
    restricted = std::max(restricted, operatorNorm(matrixClenshaw(p, tb)));
  }
  res.witness.restrictedNorm = restricted;

  // Control: gamma itself has norm 1 in both pictures (the level-0 circle has
  // modulus 1 and appears in both point families).
  Element g = generatorElement(AlgebraTag::SUq2, Gen::G);
  res.gammaControl.label = "gamma";
  double gammaSup = 0.0;
  for (int k = 0; k <= params.levels; ++k)
    gammaSup = std::max(gammaSup, std::pow(std::abs(params.q), k));
  res.gammaControl.fullNormSpectral = gammaSup;
  res.gammaControl.fullNormOperator =
      operatorNorm(Eigen::MatrixXcd(evalElementSparse(full, g, Bindings{params.q, {1.0, 0.0}})));
  res.gammaControl.restrictedNorm = gridOperatorNorm(grid, g);

  res.zeroControl.label = "zero";

  res.normRatio = res.witness.restrictedNorm > 0
                      ? res.witness.fullNormOperator / res.witness.restrictedNorm
                      : std::numeric_limits<double>::infinity();

  res.injectivity = injectivityDiagnostic(
      grid, injectivityMonomialSet(params.injectivityMaxAlpha, params.injectivityMaxGamma));

  res.separated = res.normRatio >= 10.0 && res.injectivity.sigmaMin > 0.0;
  return res;
}

}  // namespace qgl
