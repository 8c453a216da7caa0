#pragma once

#include "qgl/algebra.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <optional>
#include <vector>

namespace qgl {

using Complex = std::complex<double>;
using SparseMatrixXcd = Eigen::SparseMatrix<Complex>;

/// Rational clock phase theta = L / N with gcd(L, N) = 1.
struct ClockTheta {
  int L = 0;
  int N = 1;
  double value() const { return static_cast<double>(L) / N; }
};

struct TruncatedRepParams {
  double q = 0.5;
  int levels = 4;         // K: circles q^0..q^K
  int modesPerLevel = 8;  // N: cyclic Fourier modes per circle
  bool originVector = false;
  std::optional<ClockTheta> theta;  // present => GqTheta rep with the clock u
};

/// Per-relation residual norms; the only defect is the alpha alpha* relation
/// confined to the level-K block, of norm exactly 1 - q^{2K+2}.
struct ResidualCertificate {
  double interiorResidual = 0.0;  // all relations, boundary block projected away
  double boundaryDefect = 0.0;    // measured norm of the level-K alpha alpha* defect
  double boundaryDefectFormula = 0.0;  // 1 - q^{2K+2}
};

/// Finite truncation of the concrete representation: basis e_{k,j}, k = 0..K,
/// j in Z_N, with gamma e_{k,j} = q^k e_{k,j+1 mod N}, alpha lowering the level
/// with weight sqrt(1 - q^{2k}) and alpha* raising with sqrt(1 - q^{2k+2}).
struct TruncatedRep {
  AlgebraTag tag = AlgebraTag::SUq2;
  TruncatedRepParams params;
  int dim = 0;
  SparseMatrixXcd alpha, gamma, u;
  ResidualCertificate certificate;

  int index(int k, int j) const { return k * params.modesPerLevel + j; }
  int originIndex() const { return (params.levels + 1) * params.modesPerLevel; }
};

TruncatedRep buildFullRep(const TruncatedRepParams& params);

/// Numeric bindings for evaluation; zeta defaults to the rep's clock phase.
struct Bindings {
  double q;
  Complex zeta{1.0, 0.0};
};

/// Substitution homomorphism into the truncation (dense result).
Eigen::MatrixXcd evalElement(const TruncatedRep& rep, const Element& x, const Bindings& bindings);
Eigen::MatrixXcd evalElement(const TruncatedRep& rep, const Element& x);

/// Sparse evaluation (all monomial images are generalized permutation matrices).
SparseMatrixXcd evalElementSparse(const TruncatedRep& rep, const Element& x,
                                  const Bindings& bindings);

/// Eigenvalues of pi(gamma* gamma) grouped with multiplicities, ascending.
std::vector<std::pair<double, int>> spectrumGammaStarGamma(const TruncatedRep& rep);

enum class ScalingBranch { chainBranch, vanishBranch, truncationBoundary };
enum class ScalingDirection { alphaLowering, alphaRaising };

/// Lemma-4.2 style diagnostic for x = pi(gamma* gamma) and y = pi(alpha) (or
/// pi(alpha*)): chain if the rescaled eigenvalue stays in the spectrum, vanish if
/// y kills the spectral patch, truncation boundary otherwise.
ScalingBranch spectralScalingDiagnostic(const TruncatedRep& rep, double lambda, double delta,
                                        ScalingDirection direction = ScalingDirection::alphaLowering,
                                        const Eigen::MatrixXcd* yOverride = nullptr);

}  // namespace qgl
