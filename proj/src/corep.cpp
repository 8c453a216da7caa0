#include "qgl/corep.hpp"

#include <cmath>
#include <stdexcept>

namespace qgl {

CorepMatrix makeCorepMatrix(AlgebraTag tag, int dim) {
  if (dim <= 0) throw std::invalid_argument("makeCorepMatrix: dim must be positive");
  CorepMatrix U;
  U.tag = tag;
  U.dim = dim;
  U.entries.assign(static_cast<std::size_t>(dim) * dim, zeroElement(tag));
  return U;
}

CorepMatrix fundamentalCorep(AlgebraTag tag) {
  CorepMatrix U = makeCorepMatrix(tag, 2);
  U.at(0, 0) = generatorElement(tag, Gen::A);
  U.at(0, 1) = scale(-LaurentCoefficient::qPower(1), generatorElement(tag, Gen::GStar));
  U.at(1, 0) = generatorElement(tag, Gen::G);
  U.at(1, 1) = generatorElement(tag, Gen::AStar);
  return U;
}

CorepMatrix uThetaCorep() {
  CorepMatrix U = makeCorepMatrix(AlgebraTag::GqTheta, 1);
  U.at(0, 0) = generatorElement(AlgebraTag::GqTheta, Gen::U);
  return U;
}

CorepCheckResult corepCheck(const CorepMatrix& U) {
  CorepCheckResult res;
  const int k = U.dim;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      TensorElement lhs = coproduct(U.at(i, j));
      TensorElement rhs(U.tag);
      for (int p = 0; p < k; ++p) rhs = tensorAdd(rhs, tensorOf(U.at(i, p), U.at(p, j)));
      if (lhs != rhs) res.defects.push_back({i, j, "comultiplicativity"});
    }
  }
  Element one = unitElement(U.tag);
  Element zero = zeroElement(U.tag);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Element uu = zero;  // (U*U)_{ij} = sum_p u_{pi}* u_{pj}
      Element uus = zero;  // (UU*)_{ij} = sum_p u_{ip} u_{jp}*
      for (int p = 0; p < k; ++p) {
        uu = add(uu, multiply(adjoint(U.at(p, i)), U.at(p, j)));
        uus = add(uus, multiply(U.at(i, p), adjoint(U.at(j, p))));
      }
      const Element& expect = i == j ? one : zero;
      if (uu != expect) res.defects.push_back({i, j, "unitarity-left"});
      if (uus != expect) res.defects.push_back({i, j, "unitarity-right"});
    }
  }
  res.ok = res.defects.empty();
  return res;
}

CorepMatrix tensorCorep(const CorepMatrix& U, const CorepMatrix& V) {
  if (U.tag != V.tag) throw AlgebraError("tensorCorep: algebra tag mismatch");
  CorepMatrix W = makeCorepMatrix(U.tag, U.dim * V.dim);
  for (int i = 0; i < U.dim; ++i)
    for (int j = 0; j < U.dim; ++j)
      for (int a = 0; a < V.dim; ++a)
        for (int b = 0; b < V.dim; ++b)
          W.at(i * V.dim + a, j * V.dim + b) = multiply(U.at(i, j), V.at(a, b));
  return W;
}

FiniteDimRep makeFiniteDimRep(AlgebraTag tag, double q, Complex zeta, const MatrixXcd& alpha,
                              const MatrixXcd& gamma, const MatrixXcd& u, double tolerance) {
  if (!(std::abs(q) > 0.0 && std::abs(q) < 1.0))
    throw std::invalid_argument("makeFiniteDimRep: q must lie in (-1,1) minus 0");
  FiniteDimRep rep;
  rep.tag = tag;
  rep.dim = static_cast<int>(alpha.rows());
  rep.q = q;
  rep.zeta = zeta;
  rep.tolerance = tolerance;
  rep.alpha = alpha;
  rep.gamma = gamma;
  rep.u = tag == AlgebraTag::GqTheta ? u : MatrixXcd::Identity(alpha.rows(), alpha.cols());

  const MatrixXcd I = MatrixXcd::Identity(alpha.rows(), alpha.cols());
  const MatrixXcd as = alpha.adjoint(), gs = gamma.adjoint();
  double r = 0.0;
  auto res = [&r](const MatrixXcd& m) { r = std::max(r, m.norm()); };
  res(gs * gamma - gamma * gs);
  res(q * gs * alpha - alpha * gs);
  res(q * gamma * alpha - alpha * gamma);
  res(as * alpha + gs * gamma - I);
  res(alpha * as + q * q * gamma * gs - I);
  if (tag == AlgebraTag::GqTheta) {
    const MatrixXcd us = rep.u.adjoint();
    res(us * rep.u - I);
    res(rep.u * us - I);
    res(us * gamma * rep.u - zeta * gamma);
    res(us * alpha * rep.u - alpha);
  }
  rep.maxRelationResidual = r;
  if (r > tolerance)
    throw std::invalid_argument("makeFiniteDimRep: relation residual " + std::to_string(r) +
                                " exceeds tolerance");
  return rep;
}

FiniteDimRep character(Complex z, Complex w, double q, double tolerance) {
  if (std::abs(std::abs(z) - 1.0) > tolerance || std::abs(std::abs(w) - 1.0) > tolerance)
    throw std::invalid_argument("character: z and w must have unit modulus");
  MatrixXcd a(1, 1), g(1, 1), u(1, 1);
  a(0, 0) = z;
  g(0, 0) = Complex(0, 0);
  u(0, 0) = w;
  return makeFiniteDimRep(AlgebraTag::GqTheta, q, Complex(1, 0), a, g, u, tolerance);
}

MatrixXcd evalFiniteDim(const FiniteDimRep& rep, const Element& x) {
  if (x.tag() != rep.tag && !(x.tag() == AlgebraTag::SUq2 && rep.tag == AlgebraTag::GqTheta))
    throw AlgebraError("evalFiniteDim: algebra tag mismatch");
  const int d = rep.dim;
  MatrixXcd out = MatrixXcd::Zero(d, d);
  const MatrixXcd as = rep.alpha.adjoint(), gs = rep.gamma.adjoint(), us = rep.u.adjoint();
  for (const auto& [m, c] : x.terms()) {
    MatrixXcd t = MatrixXcd::Identity(d, d);
    const MatrixXcd& aPow = m.a >= 0 ? rep.alpha : as;
    for (int i = 0; i < std::abs(m.a); ++i) t = t * aPow;
    for (int i = 0; i < m.g; ++i) t = t * rep.gamma;
    for (int i = 0; i < m.gs; ++i) t = t * gs;
    const MatrixXcd& uPow = m.u >= 0 ? rep.u : us;
    for (int i = 0; i < std::abs(m.u); ++i) t = t * uPow;
    out += c.evalNumeric(rep.q, rep.zeta) * t;
  }
  return out;
}

Cor24Result cor24Check(const FiniteDimRep& rep, const CorepMatrix& U, double tol) {
  if (rep.tag != U.tag && !(U.tag == AlgebraTag::SUq2 && rep.tag == AlgebraTag::GqTheta))
    throw AlgebraError("cor24Check: algebra tag mismatch");
  Cor24Result res;
  const int k = U.dim;
  const MatrixXcd I = MatrixXcd::Identity(rep.dim, rep.dim);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Element s = zeroElement(U.tag);
      for (int p = 0; p < k; ++p) s = add(s, multiply(adjoint(U.at(j, p)), U.at(i, p)));
      MatrixXcd m = evalFiniteDim(rep, s);
      res.table.push_back(m);
      MatrixXcd expect = i == j ? I : MatrixXcd::Zero(rep.dim, rep.dim);
      res.maxDefect = std::max(res.maxDefect, (m - expect).norm());
    }
  }
  res.ok = res.maxDefect <= tol;
  return res;
}

}  // namespace qgl
