#include "qgl/opnorm.hpp"

#include <cmath>
#include <stdexcept>

namespace qgl {

namespace {

// Deterministic start vector: decorrelated from structured matrices, no RNG state.
Eigen::VectorXcd seedVector(Eigen::Index n) {
  Eigen::VectorXcd v(n);
  double s = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    s = std::fmod(s * 1.6180339887498949 + 0.1234567, 1.0);
    v(i) = std::complex<double>(1.0 + s, 0.5 - s);
  }
  v.normalize();
  return v;
}

}  // namespace

double operatorNorm(const Eigen::MatrixXcd& m) {
  if (!m.allFinite()) throw std::invalid_argument("operatorNorm: non-finite entries");
  if (m.size() == 0) return 0.0;
  const Eigen::Index n = m.cols();
  // Power iteration on M*M.
  Eigen::VectorXcd v = seedVector(n);
  double prev = -1.0;
  for (int it = 0; it < 2000; ++it) {
    Eigen::VectorXcd w = m.adjoint() * (m * v);
    double norm = w.norm();
    if (norm == 0.0) return 0.0;
    double rayleigh = v.dot(w).real();  // v is unit: estimate of sigma^2
    double residual = (w - rayleigh * v).norm();
    v = w / norm;
    double sigma = std::sqrt(norm);
    // Require both a stalled iterate and a small eigen-residual before trusting it.
    if (prev >= 0.0 && std::abs(sigma - prev) <= 1e-13 * std::max(1.0, sigma) &&
        residual <= 1e-12 * std::max(1.0, rayleigh))
      return sigma;
    prev = sigma;
  }
  // Slow convergence (near-degenerate top singular values): fall back to SVD.
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double operatorNorm(const Eigen::MatrixXd& m) {
  return operatorNorm(Eigen::MatrixXcd(m.cast<std::complex<double>>()));
}

}  // namespace qgl
