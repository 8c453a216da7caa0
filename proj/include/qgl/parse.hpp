#pragma once

#include "qgl/algebra.hpp"

#include <stdexcept>
#include <string>

namespace qgl {

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Parses the expression grammar into a normal-form element of the session
/// algebra. Atoms: a a* g g* u u* (crossed product), v v* w w* (torus),
/// z z* u u* (circle quotient), plus the scalars q, zeta, i, 1 and rationals;
/// juxtaposition multiplies, ^ takes integer powers, + and - combine terms.
Element parseExpression(const std::string& text, AlgebraTag tag);

/// Canonical rendering; parse(print(x)) == x and printing is idempotent under
/// reparsing. Monomials appear in the basis order (alpha, gamma, gamma*, u).
std::string printElement(const Element& x);

/// Same with an exact substitution q -> value applied to the coefficients first.
std::string printElement(const Element& x, const BigRational& qValue);

}  // namespace qgl
