#pragma once

#include "qgl/algebra.hpp"
#include "qgl/truncrep.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace qgl {

enum class TorusModelKind { clock, truncatedShift };

/// Finite model of the rotation-algebra relation wv = e^{2 pi i theta} vw.
/// clock: theta = L/N exact on Z_N. truncatedShift: irrational theta on the mode
/// window [-J, J] with a cyclic wrap (so w stays unitary); the relation defect is
/// confined to the wrap column.
struct TorusModel {
  TorusModelKind kind = TorusModelKind::clock;
  ClockTheta clock;     // clock model
  double theta = 0.0;   // truncatedShift model
  int windowJ = 0;      // truncatedShift model

  int size() const { return kind == TorusModelKind::clock ? clock.N : 2 * windowJ + 1; }
  double thetaValue() const { return kind == TorusModelKind::clock ? clock.value() : theta; }
};

TorusModel clockModel(int L, int N);
TorusModel truncatedShiftModel(double theta, int windowJ);

struct TorusRep {
  TorusModel model;
  Eigen::MatrixXcd v, w;  // unitary
  double relationDefect = 0.0;          // || w v - zeta v w ||
  double interiorRelationDefect = 0.0;  // same with the wrap column projected away
};

/// v = diag(zeta^{-j}), w = forward cyclic shift; then w v = zeta v w with
/// zeta = e^{2 pi i theta}. Exact for the clock model; for truncatedShift the
/// wrap column carries a defect of norm |1 - e^{2 pi i theta (2J+1)}|.
TorusRep buildTorusRep(const TorusModel& model);

/// Substitution v, w -> model unitaries for Torus-tagged elements.
Eigen::MatrixXcd evalTorusElement(const TorusRep& rep, const Element& x, double q = 1.0);

/// Ladder coefficient sqrt((1 - q^{2m})(1 - q^{2m-2}) ... (1 - q^{2n+2})) for
/// m >= n, extended symmetrically; cq(n, n) = 1.
double cq(int m, int n, double q);

/// Exact square of cq as a rational in q: prod_{j=n+1}^{m} (1 - q^{2j}).
BigRational cqSquaredRational(int m, int n, const BigRational& q);

/// Truncation of the crossed product: the level rep with the clock unitary
/// replicated across levels. All relations exact except the level-K boundary.
TruncatedRep buildCrossedRep(double q, int levels, const ClockTheta& clock);

/// Ladder structure extracted from a built rep: p_n are the level projections,
/// v_n the polar parts of pi(alpha*)^n restricted to level 0.
struct ShiftDecomposition {
  std::vector<Eigen::MatrixXcd> vFamily;           // v_n : level 0 -> level n
  std::vector<std::pair<int, double>> cqMeasured;  // n -> ||p_{n+1} pi(alpha*) p_n||
  double maxLadderResidual = 0.0;      // p_m pi(alpha*)^k p_n vs delta cq(m,n) v_m v_n*
  double maxUnitarityDefect = 0.0;     // || v_n* v_n - 1 ||
  double maxClockCommutator = 0.0;     // || v_n* u v_n - u|_0 || (reps with a clock only)
  double maxGammaIntertwine = 0.0;     // || v_n* gamma v_n - q^n gamma|_0 ||
  bool ok = false;                     // all of the above <= tolerance
  double tolerance = 1e-10;
};

/// Checks the ladder identities for m, n, k <= maxIndex (default: levels - 1).
ShiftDecomposition shiftDecomposition(const TruncatedRep& rep, int maxIndex = -1);

/// Q = sum_m P_m alpha^m with alpha-free P_m; exact, reassembly via multiply
/// returns Q.
std::map<int, Element> decomposeByAlphaDegree(const Element& q);

/// Block matrix over the torus representation space: rows/cols are ladder levels
/// 0..cutoff, each block of size model.size().
struct BlockForm {
  int cutoff = 0;
  int torusDim = 0;
  Eigen::MatrixXcd matrix;

  Eigen::MatrixXcd block(int row, int col) const {
    return matrix.block(row * torusDim, col * torusDim, torusDim, torusDim);
  }
};

/// Assembles pi(Q) from the alpha-degree parts: block (r, n) picks up
/// cq(r, n) times the torus image of P_{n-r} with gamma -> q^r w and u -> v.
/// Equals the direct crossed-rep evaluation on interior blocks.
BlockForm assembleMatrixForm(const Element& q, const TorusRep& torus, double qValue, int cutoff);

int maxAlphaDegree(const Element& q);

struct NormAgreementRow {
  std::string label;
  double normA = 0.0;
  double normB = 0.0;
  double relDiff = 0.0;  // |normA - normB| / max(normA, normB, eps)
};

struct NormAgreementResult {
  std::vector<NormAgreementRow> rows;
  double maxRelDiff = 0.0;
  double tolerance = 0.05;
  bool agree = false;
};

/// Norms of assembled block forms under two torus models; the two finite pictures
/// of the same element should agree within the tolerance.
NormAgreementResult normAgreementExperiment(
    const std::vector<std::pair<std::string, Element>>& suite, const TorusModel& modelA,
    const TorusModel& modelB, double q, int cutoff, double tolerance = 0.05);

/// Same comparison for plain torus elements under the two models.
NormAgreementResult torusUniquenessDemo(const std::vector<std::pair<std::string, Element>>& suite,
                                        const TorusModel& modelA, const TorusModel& modelB,
                                        double tolerance = 0.05);

}  // namespace qgl
