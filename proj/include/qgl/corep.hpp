#pragma once

#include "qgl/algebra.hpp"
#include "qgl/hopf.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace qgl {

using MatrixXcd = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Square matrix of Elements over one algebra.
struct CorepMatrix {
  AlgebraTag tag = AlgebraTag::SUq2;
  int dim = 0;
  std::vector<Element> entries;  // row-major, dim*dim

  const Element& at(int i, int j) const { return entries[static_cast<std::size_t>(i * dim + j)]; }
  Element& at(int i, int j) { return entries[static_cast<std::size_t>(i * dim + j)]; }
};

CorepMatrix makeCorepMatrix(AlgebraTag tag, int dim);

/// The fundamental 2x2 corepresentation [[alpha, -q gamma*], [gamma, alpha*]].
CorepMatrix fundamentalCorep(AlgebraTag tag = AlgebraTag::SUq2);

/// The 1x1 group-like corep [u]. GqTheta only.
CorepMatrix uThetaCorep();

struct CorepDefect {
  int i = 0, j = 0;
  std::string kind;  // "comultiplicativity" | "unitarity-left" | "unitarity-right"
};

struct CorepCheckResult {
  bool ok = false;
  std::vector<CorepDefect> defects;
};

/// Exact symbolic check: Delta(u_ij) = sum_k u_ik (x) u_kj and U*U = UU* = 1.
CorepCheckResult corepCheck(const CorepMatrix& U);

/// Tensor product corep: w_{(i,k),(j,l)} = u_ij * v_kl.
CorepMatrix tensorCorep(const CorepMatrix& U, const CorepMatrix& V);

/// Finite-dimensional *-representation by complex matrices, with a verified
/// relation-residual certificate (floating mode).
struct FiniteDimRep {
  AlgebraTag tag = AlgebraTag::SUq2;
  int dim = 0;
  double q = 0.0;
  Complex zeta{1.0, 0.0};
  double tolerance = 1e-12;
  MatrixXcd alpha, gamma, u;
  double maxRelationResidual = 0.0;
};

/// Builds and validates a finite-dimensional representation; throws if any
/// relation residual exceeds the tolerance or u is not unitary.
FiniteDimRep makeFiniteDimRep(AlgebraTag tag, double q, Complex zeta, const MatrixXcd& alpha,
                              const MatrixXcd& gamma, const MatrixXcd& u, double tolerance = 1e-12);

/// 1-dimensional representation alpha -> z, gamma -> 0, u -> w. |z| = |w| = 1.
FiniteDimRep character(Complex z, Complex w, double q, double tolerance = 1e-12);

/// Substitution homomorphism: evaluate an Element under a finite-dimensional rep.
MatrixXcd evalFiniteDim(const FiniteDimRep& rep, const Element& x);

struct Cor24Result {
  bool ok = false;
  double maxDefect = 0.0;
  std::vector<MatrixXcd> table;  // row-major k*k blocks pi(sum_p u*_{jp} u_{ip})
};

/// Corollary-2.4 identity: pi(sum_p u*_{j,p} u_{i,p}) = delta_ij 1.
Cor24Result cor24Check(const FiniteDimRep& rep, const CorepMatrix& U, double tol = 1e-10);

}  // namespace qgl
