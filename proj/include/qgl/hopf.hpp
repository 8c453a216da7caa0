#pragma once

#include "qgl/algebra.hpp"

#include <map>
#include <tuple>

namespace qgl {

/// Coproduct into the algebraic tensor square. SUq2/GqTheta only.
TensorElement coproduct(const Element& x);

/// Counit: unital *-character pinned by (eps (x) id) Delta = id.
LaurentCoefficient counit(const Element& x);

/// Antipode: linear anti-homomorphism pinned by m (S (x) id) Delta = eps(.)1.
/// Generator values: S(alpha)=alpha*, S(alpha*)=alpha, S(gamma)=-q gamma,
/// S(gamma*)=-q^{-1} gamma*, S(u)=u*.
Element antipode(const Element& x);

/// Torus-quotient grading: aExp + gExp - gStarExp. SUq2 monomials (uExp = 0).
int tDegree(const Monomial& m);

/// Projection onto the tDegree-0 part, i.e. Pol(SUq2/T).
Element invariantPart(const Element& x);

/// Hopf quotient alpha -> z, gamma -> 0, u -> u; lands in the Circle algebra.
Element quotientToCircle(const Element& x);

/// m((S (x) id) Delta(x)) and m((id (x) S) Delta(x)); both must equal counit(x)*1.
Element antipodeAxiomLeft(const Element& x);
Element antipodeAxiomRight(const Element& x);

/// (eps (x) id) Delta and (id (x) eps) Delta; both must return x.
Element counitAxiomLeft(const Element& x);
Element counitAxiomRight(const Element& x);

/// Triple tensors, used for the coassociativity check only.
class Tensor3Element {
 public:
  using Key = std::tuple<Monomial, Monomial, Monomial>;
  using TermMap = std::map<Key, LaurentCoefficient>;

  explicit Tensor3Element(AlgebraTag tag = AlgebraTag::SUq2) : tag_(tag) {}
  AlgebraTag tag() const { return tag_; }
  const TermMap& terms() const { return terms_; }

  void add(const Monomial& m1, const Monomial& m2, const Monomial& m3,
           const LaurentCoefficient& c) {
    if (c.isZero()) return;
    Key k{m1, m2, m3};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[k] = c;
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  friend bool operator==(const Tensor3Element& x, const Tensor3Element& y) {
    return x.tag_ == y.tag_ && x.terms_ == y.terms_;
  }

 private:
  AlgebraTag tag_;
  TermMap terms_;
};

Tensor3Element coproductLeftLeg(const TensorElement& t);   // (Delta (x) id)
Tensor3Element coproductRightLeg(const TensorElement& t);  // (id (x) Delta)

/// (id (x) quotientToCircle) Delta(x) == x (x) 1 in the mixed tensor; exact check.
bool circleInvarianceHolds(const Element& x);

}  // namespace qgl
