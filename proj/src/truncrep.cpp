#include "qgl/truncrep.hpp"

#include "qgl/opnorm.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qgl {

namespace {

constexpr double kPi = std::numbers::pi;

SparseMatrixXcd fromTriplets(int dim, std::vector<Eigen::Triplet<Complex>>& trips) {
  SparseMatrixXcd m(dim, dim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

}  // namespace

TruncatedRep buildFullRep(const TruncatedRepParams& params) {
  const double q = params.q;
  if (!(std::abs(q) > 0.0 && std::abs(q) < 1.0))
    throw std::invalid_argument("buildFullRep: |q| must lie in (0,1)");
  if (params.levels < 0) throw std::invalid_argument("buildFullRep: levels must be >= 0");
  if (params.modesPerLevel < 1) throw std::invalid_argument("buildFullRep: modes must be >= 1");
  if (params.theta) {
    if (params.theta->N != params.modesPerLevel)
      throw std::invalid_argument("buildFullRep: clock size must equal modesPerLevel");
    if (std::gcd(std::abs(params.theta->L), params.theta->N) != 1)
      throw std::invalid_argument("buildFullRep: clock requires gcd(L,N) = 1");
  }

  TruncatedRep rep;
  rep.tag = params.theta ? AlgebraTag::GqTheta : AlgebraTag::SUq2;
  rep.params = params;
  const int K = params.levels, N = params.modesPerLevel;
  rep.dim = (K + 1) * N + (params.originVector ? 1 : 0);

  std::vector<Eigen::Triplet<Complex>> ta, tg, tu;
  for (int k = 0; k <= K; ++k) {
    for (int j = 0; j < N; ++j) {
      const int col = rep.index(k, j);
      // gamma e_{k,j} = q^k e_{k,j+1 mod N}
      tg.emplace_back(rep.index(k, (j + 1) % N), col, Complex(std::pow(q, k), 0.0));
      // alpha e_{k,j} = sqrt(1 - q^{2k}) e_{k-1,j}; kills level 0
      if (k > 0)
        ta.emplace_back(rep.index(k - 1, j), col, Complex(std::sqrt(1.0 - std::pow(q, 2 * k)), 0.0));
      if (params.theta) {
        // u e_{k,j} = omega^{-j} e_{k,j}, omega = e^{2 pi i L/N}
        double phi = -2.0 * kPi * params.theta->L * j / params.theta->N;
        tu.emplace_back(col, col, Complex(std::cos(phi), std::sin(phi)));
      }
    }
  }
  if (params.originVector) {
    const int o = rep.originIndex();
    ta.emplace_back(o, o, Complex(1.0, 0.0));  // alpha delta0 = delta0 (and gamma delta0 = 0)
    if (params.theta) tu.emplace_back(o, o, Complex(1.0, 0.0));
  }
  rep.alpha = fromTriplets(rep.dim, ta);
  rep.gamma = fromTriplets(rep.dim, tg);
  if (params.theta) {
    rep.u = fromTriplets(rep.dim, tu);
  } else {
    rep.u = SparseMatrixXcd(rep.dim, rep.dim);
    rep.u.setIdentity();
  }

  // Residual certificate. Project the alpha alpha* relation off the level-K block.
  Eigen::MatrixXcd A = rep.alpha, G = rep.gamma;
  Eigen::MatrixXcd As = A.adjoint(), Gs = G.adjoint();
  Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
  Eigen::MatrixXcd pInterior = I;
  for (int j = 0; j < N; ++j) pInterior(rep.index(K, j), rep.index(K, j)) = 0.0;
  double r = 0.0;
  auto res = [&r](const Eigen::MatrixXcd& m) { r = std::max(r, operatorNorm(m)); };
  res(Gs * G - G * Gs);
  res(q * Gs * A - A * Gs);
  res(q * G * A - A * G);
  res(As * A + Gs * G - I);
  res((A * As + q * q * G * Gs - I) * pInterior);
  if (params.theta) {
    Eigen::MatrixXcd U = rep.u, Us = U.adjoint();
    double phi = 2.0 * kPi * params.theta->value();
    Complex omega(std::cos(phi), std::sin(phi));
    res(Us * U - I);
    res(Us * G * U - omega * G);
    res(Us * A * U - A);
  }
  rep.certificate.interiorResidual = r;
  rep.certificate.boundaryDefect =
      operatorNorm(Eigen::MatrixXcd((A * As + q * q * G * Gs - I) * (I - pInterior)));
  rep.certificate.boundaryDefectFormula = 1.0 - std::pow(q, 2 * K + 2);
  return rep;
}

namespace {

void checkBindings(const TruncatedRep& rep, const Bindings& b) {
  if (b.q != rep.params.q) throw std::invalid_argument("evalElement: q binding mismatch");
  if (rep.params.theta) {
    double phi = 2.0 * kPi * rep.params.theta->value();
    Complex omega(std::cos(phi), std::sin(phi));
    if (std::abs(b.zeta - omega) > 1e-12)
      throw std::invalid_argument("evalElement: zeta binding must equal the clock phase");
  }
}

}  // namespace

SparseMatrixXcd evalElementSparse(const TruncatedRep& rep, const Element& x,
                                  const Bindings& bindings) {
  if (!(x.tag() == rep.tag || (x.tag() == AlgebraTag::SUq2 && rep.tag == AlgebraTag::GqTheta)))
    throw AlgebraError("evalElement: algebra tag mismatch");
  checkBindings(rep, bindings);
  SparseMatrixXcd as = rep.alpha.adjoint(), gs = rep.gamma.adjoint(), us = rep.u.adjoint();
  SparseMatrixXcd out(rep.dim, rep.dim);
  for (const auto& [m, c] : x.terms()) {
    SparseMatrixXcd t(rep.dim, rep.dim);
    t.setIdentity();
    const SparseMatrixXcd& aPow = m.a >= 0 ? rep.alpha : as;
    for (int i = 0; i < std::abs(m.a); ++i) t = (t * aPow).pruned();
    for (int i = 0; i < m.g; ++i) t = (t * rep.gamma).pruned();
    for (int i = 0; i < m.gs; ++i) t = (t * gs).pruned();
    const SparseMatrixXcd& uPow = m.u >= 0 ? rep.u : us;
    for (int i = 0; i < std::abs(m.u); ++i) t = (t * uPow).pruned();
    out = out + Complex(c.evalNumeric(bindings.q, bindings.zeta)) * t;
  }
  out.makeCompressed();
  return out;
}

Eigen::MatrixXcd evalElement(const TruncatedRep& rep, const Element& x, const Bindings& bindings) {
  return Eigen::MatrixXcd(evalElementSparse(rep, x, bindings));
}

Eigen::MatrixXcd evalElement(const TruncatedRep& rep, const Element& x) {
  Bindings b;
  b.q = rep.params.q;
  if (rep.params.theta) {
    double phi = 2.0 * kPi * rep.params.theta->value();
    b.zeta = Complex(std::cos(phi), std::sin(phi));
  }
  return evalElement(rep, x, b);
}

std::vector<std::pair<double, int>> spectrumGammaStarGamma(const TruncatedRep& rep) {
  Eigen::MatrixXcd G = rep.gamma;
  Eigen::MatrixXcd GsG = G.adjoint() * G;  // diagonal by construction
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(rep.dim));
  for (int i = 0; i < rep.dim; ++i) vals.push_back(GsG(i, i).real());
  std::sort(vals.begin(), vals.end());
  std::vector<std::pair<double, int>> grouped;
  for (double v : vals) {
    if (!grouped.empty() && std::abs(grouped.back().first - v) <= 1e-12) {
      grouped.back().second += 1;
    } else {
      grouped.emplace_back(v, 1);
    }
  }
  return grouped;
}

ScalingBranch spectralScalingDiagnostic(const TruncatedRep& rep, double lambda, double delta,
                                        ScalingDirection direction,
                                        const Eigen::MatrixXcd* yOverride) {
  auto spectrum = spectrumGammaStarGamma(rep);
  const double tol = 1e-12;
  bool found = false;
  double gap = std::numeric_limits<double>::infinity();
  for (const auto& [v, mult] : spectrum) {
    if (std::abs(v - lambda) <= tol) {
      found = true;
    } else {
      gap = std::min(gap, std::abs(v - lambda));
    }
  }
  if (!found) throw std::invalid_argument("spectralScalingDiagnostic: lambda not in spectrum");
  if (!(delta > 0.0) || delta >= gap)
    throw std::invalid_argument("spectralScalingDiagnostic: delta exceeds the spectral gap");

  const double q2 = rep.params.q * rep.params.q;
  // Scaling of the commutation relation: alpha shifts the eigenvalue by q^{-2},
  // alpha* by q^{2}.
  double target = direction == ScalingDirection::alphaLowering ? lambda / q2 : lambda * q2;
  for (const auto& [v, mult] : spectrum)
    if (std::abs(v - target) <= tol) return ScalingBranch::chainBranch;

  // || y * p_{B_delta(lambda)}(gamma* gamma) ||
  Eigen::MatrixXcd G = rep.gamma;
  Eigen::MatrixXcd GsG = G.adjoint() * G;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
  for (int i = 0; i < rep.dim; ++i)
    if (std::abs(GsG(i, i).real() - lambda) < delta) p(i, i) = 1.0;
  Eigen::MatrixXcd y;
  if (yOverride) {
    y = *yOverride;
  } else if (direction == ScalingDirection::alphaLowering) {
    y = rep.alpha;
  } else {
    y = Eigen::MatrixXcd(rep.alpha).adjoint();
  }
  if (operatorNorm(Eigen::MatrixXcd(y * p)) <= 1e-10) {
    // The patch dies. If the shifted eigenvalue would still sit strictly below
    // the bottom of the retained chain, only the window cut it off.
    double minPos = std::numeric_limits<double>::infinity();
    for (const auto& [v, mult] : spectrum)
      if (v > tol) minPos = std::min(minPos, v);
    if (target > tol && target < minPos - tol) return ScalingBranch::truncationBoundary;
    return ScalingBranch::vanishBranch;
  }
  return ScalingBranch::truncationBoundary;
}

}  // namespace qgl
