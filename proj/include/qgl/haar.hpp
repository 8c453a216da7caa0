#pragma once

#include "qgl/algebra.hpp"
#include "qgl/rational_value.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qgl {

/// Haar values h((gamma gamma*)^j) for j = 0..maxPairs, obtained by solving the
/// linear system given by left and right invariance, (h (x) id)Delta(x) = h(x) 1,
/// on the chain span {1, gamma gamma*, (gamma gamma*)^2, ...}. h(1) = 1 pinned.
std::vector<RationalValue> haarChainValues(int maxPairs);

/// Haar state. Invariance forces h to vanish on every basis monomial except the
/// chain gamma^j (gamma*)^j (tDegree and gamma-count gradings), and on the crossed
/// product h(a u^l) = h(a) delta_{l,0}. Requires zeta-free coefficients on the
/// surviving part.
RationalValue haarState(const Element& x);

/// Conditional expectation onto span{u^l}: E(sum a_l u^l) = sum h(a_l) u^l,
/// returned as the sparse list of (l, h(a_l)) with zero values dropped.
std::vector<std::pair<int, RationalValue>> conditionalExpectation(const Element& x);

/// E(x) as an Element again (coefficients are exact only when the h-values are
/// Laurent in q; kept as a rational-value list otherwise). Used by the E-idempotence
/// and bimodule tests via the list form; this helper re-embeds into the algebra
/// with RationalValue coefficients evaluated symbolically over a common denominator.
/// zeta-graded rational value: finitely many zeta^b components.
using ZetaRationalValue = std::map<int, RationalValue>;

/// Symbolic invariance defects; empty maps mean the identity holds exactly.
/// Left:  (h (x) id) Delta(x) - h(x) 1, as monomial -> zeta-graded rational value.
std::map<Monomial, ZetaRationalValue> haarLeftInvarianceDefect(const Element& x);
std::map<Monomial, ZetaRationalValue> haarRightInvarianceDefect(const Element& x);

}  // namespace qgl
