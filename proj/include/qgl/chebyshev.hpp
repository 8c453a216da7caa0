#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace qgl {

/// Real polynomial on [-1,1] in the Chebyshev basis.
struct ChebPoly {
  std::vector<double> coeffs;  // c_0 .. c_D
  double gridSupError = 0.0;   // sup |p - f| on a 10^4-point grid, filled by the fit

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval(double s) const;  // Clenshaw
};

/// Chebyshev interpolant of f at D+1 Chebyshev nodes.
ChebPoly chebyshevApprox(const std::function<double(double)>& f, int degree);

/// p(M) for self-adjoint M with spectrum in [-1,1], by Clenshaw on matrices.
/// Stable where expanding p into monomials is not.
Eigen::MatrixXcd matrixClenshaw(const ChebPoly& p, const Eigen::MatrixXcd& m);

/// Named targets. The ramp has an optional threshold t: s -> max((s-t)/(1-t), 0),
/// which is the plain ramp at t = 0.
std::function<double(double)> rampFunction(double threshold = 0.0);
std::function<double(double)> absFunction();
/// Piecewise-linear interpolant of a table of (x, f(x)) pairs sorted by x.
std::function<double(double)> tableFunction(std::vector<std::pair<double, double>> table);

}  // namespace qgl
