#include "qgl/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgl {

namespace {
constexpr double kPi = std::numbers::pi;
}

double ChebPoly::eval(double s) const {
  if (coeffs.empty()) return 0.0;
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    double b0 = coeffs[i] + 2.0 * s * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs[0] + s * b1 - b2;
}

ChebPoly chebyshevApprox(const std::function<double(double)>& f, int degree) {
  if (degree < 0) throw std::invalid_argument("chebyshevApprox: degree must be >= 0");
  const int n = degree + 1;
  std::vector<double> fv(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) fv[static_cast<std::size_t>(j)] = f(std::cos(kPi * (j + 0.5) / n));
  ChebPoly p;
  p.coeffs.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += fv[static_cast<std::size_t>(j)] * std::cos(kPi * k * (j + 0.5) / n);
    p.coeffs[static_cast<std::size_t>(k)] = (k == 0 ? 1.0 : 2.0) * s / n;
  }
  double err = 0.0;
  const int gridN = 10000;
  for (int i = 0; i < gridN; ++i) {
    double x = -1.0 + 2.0 * i / (gridN - 1);
    err = std::max(err, std::abs(p.eval(x) - f(x)));
  }
  p.gridSupError = err;
  return p;
}

std::function<double(double)> rampFunction(double threshold) {
  if (!(threshold < 1.0)) throw std::invalid_argument("rampFunction: threshold must be < 1");
  return [threshold](double s) { return std::max((s - threshold) / (1.0 - threshold), 0.0); };
}

Eigen::MatrixXcd matrixClenshaw(const ChebPoly& p, const Eigen::MatrixXcd& m) {
  const int n = p.degree();
  const Eigen::Index d = m.rows();
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  if (n < 0) return Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd b1 = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd b2 = Eigen::MatrixXcd::Zero(d, d);
  for (int k = n; k >= 1; --k) {
    Eigen::MatrixXcd b0 = p.coeffs[static_cast<std::size_t>(k)] * id + 2.0 * (m * b1) - b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return p.coeffs[0] * id + m * b1 - b2;
}

std::function<double(double)> absFunction() {
  return [](double s) { return std::abs(s); };
}

std::function<double(double)> tableFunction(std::vector<std::pair<double, double>> table) {
  if (table.size() < 2) throw std::invalid_argument("tableFunction: need at least 2 points");
  std::sort(table.begin(), table.end());
  return [table = std::move(table)](double x) {
    if (x <= table.front().first) return table.front().second;
    if (x >= table.back().first) return table.back().second;
    auto hi = std::upper_bound(table.begin(), table.end(), std::make_pair(x, 0.0),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    auto lo = hi - 1;
    double t = (x - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
  };
}

}  // namespace qgl
