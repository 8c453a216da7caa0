#pragma once

#include <Eigen/Dense>

namespace qgl {

/// Largest singular value. Deterministically seeded power iteration on M*M with a
/// full decomposition fallback when the iteration stalls. Accuracy better than
/// 1e-10 * max(1, result).
double operatorNorm(const Eigen::MatrixXcd& m);
double operatorNorm(const Eigen::MatrixXd& m);

}  // namespace qgl
