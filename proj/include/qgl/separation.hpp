#pragma once

#include "qgl/algebra.hpp"
#include "qgl/chebyshev.hpp"
#include "qgl/gridrep.hpp"
#include "qgl/truncrep.hpp"

namespace qgl {

struct SeparationParams {
  double q = 0.5;
  int levels = 12;          // K for both representations
  int modesPerLevel = 64;   // N: Fourier modes of the full truncation
  int anglesPerLevel = 64;  // G: sample angles of the restricted family
  int chebDegree = 64;
  int injectivityMaxAlpha = 2;
  int injectivityMaxGamma = 2;
};

/// One row of the experiment: a self-adjoint test element evaluated in the full
/// truncation and in the restricted point family.
struct SeparationRow {
  std::string label;
  double fullNormSpectral = 0.0;  // sup |f| over the full point spectrum
  double fullNormOperator = 0.0;  // operator norm of the evaluated element
  double restrictedNorm = 0.0;    // sup over the restricted family
};

struct SeparationResult {
  SeparationParams params;
  double rampThreshold = 0.0;
  double chebSupError = 0.0;
  SeparationRow witness;       // x = p((gamma - gamma*)/2i)
  SeparationRow gammaControl;  // x = gamma: both norms must agree
  SeparationRow zeroControl;   // x = 0
  double normRatio = 0.0;      // witness full / restricted
  InjectivityResult injectivity;
  bool separated = false;  // ratio >= 10 and sigmaMin > 0
};

/// Clenshaw evaluation of a Chebyshev polynomial at a symbolic element. The
/// coefficients are converted to exact rationals, so the result is an exact
/// element of the algebra.
Element chebyshevOfElement(const ChebPoly& p, const Element& t);

/// Self-adjoint coordinate (gamma - gamma*) / 2i.
Element imaginaryPartOfGamma(AlgebraTag tag);

/// The ramp threshold used by the witness: 0 for q > 0; for q < 0 the restricted
/// family reaches imaginary parts up to |q| on the odd levels, so the ramp is
/// shifted to (1 + |q|)/2 to keep the restricted values in the flat region.
double separationRampThreshold(double q);

/// Norm separation between the full truncation and the restricted point family:
/// a high-degree ramp in Im(gamma) is near its sup on the full spectrum but
/// uniformly small on the restricted family, while gamma itself (the control)
/// has the same norm in both.
SeparationResult normSeparationExperiment(const SeparationParams& params);

}  // namespace qgl
