#include "qgl/crossed.hpp"

#include "qgl/opnorm.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qgl {

namespace {
constexpr double kPi = std::numbers::pi;

Complex unitPhase(double turns) {
  double phi = 2.0 * kPi * turns;
  return {std::cos(phi), std::sin(phi)};
}
}  // namespace

TorusModel clockModel(int L, int N) {
  if (N < 1) throw std::invalid_argument("clockModel: N >= 1");
  if (std::gcd(std::abs(L), N) != 1) throw std::invalid_argument("clockModel: gcd(L,N) must be 1");
  TorusModel m;
  m.kind = TorusModelKind::clock;
  m.clock = ClockTheta{L, N};
  return m;
}

TorusModel truncatedShiftModel(double theta, int windowJ) {
  if (windowJ < 1) throw std::invalid_argument("truncatedShiftModel: window J >= 1");
  TorusModel m;
  m.kind = TorusModelKind::truncatedShift;
  m.theta = theta;
  m.windowJ = windowJ;
  return m;
}

TorusRep buildTorusRep(const TorusModel& model) {
  TorusRep rep;
  rep.model = model;
  const int n = model.size();
  const double theta = model.thetaValue();
  rep.v = Eigen::MatrixXcd::Zero(n, n);
  rep.w = Eigen::MatrixXcd::Zero(n, n);
  // Basis labels: clock j = 0..N-1, truncatedShift j = -J..J (stored shifted).
  const int jOffset = model.kind == TorusModelKind::clock ? 0 : -model.windowJ;
  for (int i = 0; i < n; ++i) {
    rep.v(i, i) = unitPhase(-theta * (i + jOffset));
    rep.w((i + 1) % n, i) = 1.0;
  }
  Complex zeta = unitPhase(theta);
  Eigen::MatrixXcd defect = rep.w * rep.v - zeta * rep.v * rep.w;
  rep.relationDefect = operatorNorm(defect);
  Eigen::MatrixXcd pInterior = Eigen::MatrixXcd::Identity(n, n);
  pInterior(n - 1, n - 1) = 0.0;  // the wrap column
  rep.interiorRelationDefect = operatorNorm(Eigen::MatrixXcd(defect * pInterior));
  return rep;
}

Eigen::MatrixXcd evalTorusElement(const TorusRep& rep, const Element& x, double q) {
  if (x.tag() != AlgebraTag::Torus) throw AlgebraError("evalTorusElement: Torus elements only");
  const int n = rep.model.size();
  Complex zeta = unitPhase(rep.model.thetaValue());
  Eigen::MatrixXcd vs = rep.v.adjoint(), ws = rep.w.adjoint();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [m, c] : x.terms()) {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd& vp = m.a >= 0 ? rep.v : vs;
    for (int i = 0; i < std::abs(m.a); ++i) t = t * vp;
    const Eigen::MatrixXcd& wp = m.u >= 0 ? rep.w : ws;
    for (int i = 0; i < std::abs(m.u); ++i) t = t * wp;
    out += c.evalNumeric(q, zeta) * t;
  }
  return out;
}

double cq(int m, int n, double q) {
  if (!(std::abs(q) > 0.0 && std::abs(q) < 1.0))
    throw std::invalid_argument("cq: |q| must lie in (0,1)");
  if (m < 0 || n < 0) throw std::invalid_argument("cq: nonnegative indices");
  if (m < n) std::swap(m, n);
  double prod = 1.0;
  for (int j = n + 1; j <= m; ++j) prod *= 1.0 - std::pow(q, 2 * j);
  return std::sqrt(prod);
}

BigRational cqSquaredRational(int m, int n, const BigRational& q) {
  if (m < 0 || n < 0) throw std::invalid_argument("cqSquaredRational: nonnegative indices");
  if (m < n) std::swap(m, n);
  BigRational prod(1);
  BigRational q2 = q * q;
  BigRational q2j(1);
  for (int j = 1; j <= m; ++j) {
    q2j *= q2;
    if (j > n) prod *= BigRational(1) - q2j;
  }
  return prod;
}

TruncatedRep buildCrossedRep(double q, int levels, const ClockTheta& clock) {
  TruncatedRepParams p;
  p.q = q;
  p.levels = levels;
  p.modesPerLevel = clock.N;
  p.theta = clock;
  return buildFullRep(p);
}

ShiftDecomposition shiftDecomposition(const TruncatedRep& rep, int maxIndex) {
  const int K = rep.params.levels, N = rep.params.modesPerLevel;
  if (K < 1) throw std::invalid_argument("shiftDecomposition: need levels >= 1");
  if (maxIndex < 0) maxIndex = K - 1;
  if (maxIndex > K) throw std::invalid_argument("shiftDecomposition: maxIndex exceeds levels");
  const double q = rep.params.q;

  Eigen::MatrixXcd As = Eigen::MatrixXcd(rep.alpha).adjoint();
  auto levelBlock = [&](const Eigen::MatrixXcd& m, int row, int col) {
    return Eigen::MatrixXcd(m.block(row * N, col * N, N, N));
  };

  ShiftDecomposition out;
  // Powers of alpha*; power k maps level n to level n + k.
  std::vector<Eigen::MatrixXcd> asPow{Eigen::MatrixXcd::Identity(rep.dim, rep.dim)};
  for (int k = 1; k <= 2 * maxIndex; ++k) asPow.push_back(asPow.back() * As);

  // v_n = polar part of p_n pi(alpha*)^n p_0.
  for (int n = 0; n <= maxIndex; ++n) {
    Eigen::MatrixXcd b = levelBlock(asPow[static_cast<std::size_t>(n)], n, 0);
    if (n == 0) {
      out.vFamily.push_back(Eigen::MatrixXcd::Identity(N, N));
    } else {
      Eigen::BDCSVD<Eigen::MatrixXcd> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
      out.vFamily.push_back(svd.matrixU() * svd.matrixV().adjoint());
    }
  }

  for (int n = 0; n < maxIndex; ++n) {
    double measured = operatorNorm(levelBlock(As, n + 1, n));
    out.cqMeasured.emplace_back(n, measured);
  }

  for (int m = 0; m <= maxIndex; ++m) {
    for (int n = 0; n <= maxIndex; ++n) {
      for (int k = 0; k <= maxIndex; ++k) {
        Eigen::MatrixXcd lhs = levelBlock(asPow[static_cast<std::size_t>(k)], m, n);
        if (n + k == m)
          lhs -= cq(m, n, q) * (out.vFamily[static_cast<std::size_t>(m)] *
                                out.vFamily[static_cast<std::size_t>(n)].adjoint());
        out.maxLadderResidual = std::max(out.maxLadderResidual, operatorNorm(lhs));
      }
    }
  }

  // gamma preserves levels (the mode shift acts inside each level), so its
  // level-diagonal blocks are the whole story.
  Eigen::MatrixXcd G = rep.gamma, U = rep.u;
  Eigen::MatrixXcd gamma0 = levelBlock(G, 0, 0);
  Eigen::MatrixXcd u0 = levelBlock(U, 0, 0);
  for (int n = 0; n <= maxIndex; ++n) {
    const Eigen::MatrixXcd& vn = out.vFamily[static_cast<std::size_t>(n)];
    out.maxUnitarityDefect = std::max(
        out.maxUnitarityDefect,
        operatorNorm(Eigen::MatrixXcd(vn.adjoint() * vn - Eigen::MatrixXcd::Identity(N, N))));
    if (rep.tag == AlgebraTag::GqTheta) {
      Eigen::MatrixXcd un = levelBlock(U, n, n);
      out.maxClockCommutator =
          std::max(out.maxClockCommutator, operatorNorm(Eigen::MatrixXcd(vn.adjoint() * un * vn - u0)));
    }
    Eigen::MatrixXcd gn = levelBlock(G, n, n);
    out.maxGammaIntertwine =
        std::max(out.maxGammaIntertwine,
                 operatorNorm(Eigen::MatrixXcd(vn.adjoint() * gn * vn - std::pow(q, n) * gamma0)));
  }
  out.ok = out.maxLadderResidual <= out.tolerance && out.maxUnitarityDefect <= out.tolerance &&
           out.maxClockCommutator <= out.tolerance && out.maxGammaIntertwine <= out.tolerance;
  return out;
}

std::map<int, Element> decomposeByAlphaDegree(const Element& q) {
  if (q.tag() != AlgebraTag::SUq2 && q.tag() != AlgebraTag::GqTheta)
    throw AlgebraError("decomposeByAlphaDegree: SUq2/GqTheta elements only");
  std::map<int, Element> parts;
  for (const auto& [m, c] : q.terms()) {
    // alpha^a gamma^g gamma*^gs u^l = q^{a(g+gs)} gamma^g gamma*^gs u^l alpha^a
    Monomial free{q.tag(), 0, m.g, m.gs, m.u};
    auto it = parts.find(m.a);
    if (it == parts.end()) it = parts.emplace(m.a, Element(q.tag())).first;
    it->second.add(free, c * LaurentCoefficient::qPower(m.a * (m.g + m.gs)));
  }
  return parts;
}

int maxAlphaDegree(const Element& q) {
  int d = 0;
  for (const auto& [m, c] : q.terms()) d = std::max(d, std::abs(m.a));
  return d;
}

BlockForm assembleMatrixForm(const Element& q, const TorusRep& torus, double qValue, int cutoff) {
  if (q.tag() != AlgebraTag::SUq2 && q.tag() != AlgebraTag::GqTheta)
    throw AlgebraError("assembleMatrixForm: SUq2/GqTheta elements only");
  if (cutoff < maxAlphaDegree(q))
    throw std::invalid_argument("assembleMatrixForm: cutoff below the alpha degree");
  const int N = torus.model.size();
  Complex zeta = unitPhase(torus.model.thetaValue());
  BlockForm out;
  out.cutoff = cutoff;
  out.torusDim = N;
  out.matrix = Eigen::MatrixXcd::Zero((cutoff + 1) * N, (cutoff + 1) * N);

  Eigen::MatrixXcd ws = torus.w.adjoint();
  auto parts = decomposeByAlphaDegree(q);
  for (const auto& [d, p] : parts) {
    for (int n = 0; n <= cutoff; ++n) {
      int r = n - d;  // alpha^d sends level n to level n - d
      if (r < 0 || r > cutoff) continue;
      // Level-r torus image: gamma -> q^r w, u -> v.
      Eigen::MatrixXcd img = Eigen::MatrixXcd::Zero(N, N);
      for (const auto& [m, c] : p.terms()) {
        Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(N, N);
        for (int i = 0; i < m.g; ++i) t = t * torus.w;
        for (int i = 0; i < m.gs; ++i) t = t * ws;
        const Eigen::MatrixXcd& vp = m.u >= 0 ? torus.v : Eigen::MatrixXcd(torus.v.adjoint());
        Eigen::MatrixXcd vpow = Eigen::MatrixXcd::Identity(N, N);
        for (int i = 0; i < std::abs(m.u); ++i) vpow = vpow * vp;
        t = t * vpow;
        img += c.evalNumeric(qValue, zeta) * std::pow(qValue, r * (m.g + m.gs)) * t;
      }
      out.matrix.block(r * N, n * N, N, N) += cq(r, n, qValue) * img;
    }
  }
  return out;
}

namespace {

NormAgreementResult compareNorms(const std::vector<std::pair<std::string, Element>>& suite,
                                 const std::function<double(const Element&)>& normA,
                                 const std::function<double(const Element&)>& normB,
                                 double tolerance) {
  NormAgreementResult res;
  res.tolerance = tolerance;
  for (const auto& [label, x] : suite) {
    NormAgreementRow row;
    row.label = label;
    row.normA = normA(x);
    row.normB = normB(x);
    row.relDiff = std::abs(row.normA - row.normB) / std::max({row.normA, row.normB, 1e-30});
    res.maxRelDiff = std::max(res.maxRelDiff, row.relDiff);
    res.rows.push_back(row);
  }
  res.agree = !res.rows.empty() && res.maxRelDiff <= tolerance;
  return res;
}

}  // namespace

NormAgreementResult normAgreementExperiment(
    const std::vector<std::pair<std::string, Element>>& suite, const TorusModel& modelA,
    const TorusModel& modelB, double q, int cutoff, double tolerance) {
  if (suite.empty()) throw std::invalid_argument("normAgreementExperiment: empty suite");
  TorusRep repA = buildTorusRep(modelA);
  TorusRep repB = buildTorusRep(modelB);
  auto normOf = [&](const TorusRep& rep) {
    return [&rep, q, cutoff](const Element& x) {
      return operatorNorm(assembleMatrixForm(x, rep, q, cutoff).matrix);
    };
  };
  return compareNorms(suite, normOf(repA), normOf(repB), tolerance);
}

NormAgreementResult torusUniquenessDemo(const std::vector<std::pair<std::string, Element>>& suite,
                                        const TorusModel& modelA, const TorusModel& modelB,
                                        double tolerance) {
  if (suite.empty()) throw std::invalid_argument("torusUniquenessDemo: empty suite");
  TorusRep repA = buildTorusRep(modelA);
  TorusRep repB = buildTorusRep(modelB);
  auto normOf = [&](const TorusRep& rep) {
    return [&rep](const Element& x) { return operatorNorm(evalTorusElement(rep, x)); };
  };
  return compareNorms(suite, normOf(repA), normOf(repB), tolerance);
}

}  // namespace qgl
