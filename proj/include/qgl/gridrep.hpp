#pragma once

#include "qgl/algebra.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qgl {

enum class GridRegion { full, lowerHalf, alternating };

struct GridRepParams {
  double q = 0.5;
  int levels = 4;        // K
  int anglesPerLevel = 8;  // G
  GridRegion region = GridRegion::lowerHalf;
};

/// Point-sampled restriction of the concrete representation to the half-circle
/// family. Points are z_{k,i} = q^k e^{i phi_i} with phi_i a lower-half base grid;
/// a negative q realizes the alternating upper/lower set automatically since q^k
/// flips the angle by pi at odd levels. gamma is diagonal multiplication by the
/// point and alpha shifts level k -> k-1 at the same base angle with weight
/// sqrt(1 - q^{2k}). Every operator preserves the angle index, so the rep is the
/// direct sum over angles of (K+1)-dimensional blocks.
struct GridRep {
  GridRepParams params;
  std::vector<double> baseAngles;  // size G, strictly inside the open lower half

  int levelDim() const { return params.levels + 1; }
  int dim() const { return levelDim() * params.anglesPerLevel; }
  std::complex<double> point(int level, int angleIdx) const;
};

GridRep buildLowerHalfGridRep(const GridRepParams& params);

/// The (K+1) x (K+1) block of pi(x) at one angle index.
Eigen::MatrixXcd evalOnGridAngle(const GridRep& rep, const Element& x, int angleIdx,
                                 std::complex<double> zeta = {1.0, 0.0});

/// Operator norm of pi(x) = max over the angle blocks.
double gridOperatorNorm(const GridRep& rep, const Element& x,
                        std::complex<double> zeta = {1.0, 0.0});

struct InjectivityResult {
  double sigmaMin = 0.0;
  int monomialCount = 0;
  long rows = 0;
};

/// Smallest singular value of the stacked evaluation map of the given monomials
/// (columns = vectorized pi(monomial)); sigmaMin > 0 certifies linear independence
/// of the images at this truncation.
InjectivityResult injectivityDiagnostic(const GridRep& rep, const std::vector<Monomial>& monomials);

/// Convenience monomial set {alpha^a gamma^m gamma*^n : |a| <= A, m, n <= M}.
std::vector<Monomial> injectivityMonomialSet(int maxAlpha, int maxGamma);

}  // namespace qgl
