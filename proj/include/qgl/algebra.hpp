#pragma once

#include "qgl/laurent.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qgl {

enum class AlgebraTag {
  SUq2,     // generators alpha, gamma
  GqTheta,  // alpha, gamma and the crossed-product unitary u
  Torus,    // unitaries v, w with wv = zeta vw
  Circle,   // commutative image of quotientToCircle: unitaries z and u
};

std::string tagName(AlgebraTag tag);

enum class Gen { A, AStar, G, GStar, U, UStar, V, VStar, W, WStar, Z, ZStar };

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Normal-form basis monomial.
///
/// SUq2/GqTheta: alpha^a gamma^g (gamma*)^gs u^u with a, u in Z (negative a means
/// (alpha*)^{-a}), g, gs >= 0; u must be 0 for SUq2.
/// Torus: v^a w^u. Circle: z^a u^u (commuting unitaries).
struct Monomial {
  AlgebraTag tag = AlgebraTag::SUq2;
  int a = 0;
  int g = 0;
  int gs = 0;
  int u = 0;

  bool isUnit() const { return a == 0 && g == 0 && gs == 0 && u == 0; }
  int totalDegree() const { return std::abs(a) + g + gs + std::abs(u); }

  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.tag == y.tag && x.a == y.a && x.g == y.g && x.gs == y.gs && x.u == y.u;
  }
  friend bool operator<(const Monomial& x, const Monomial& y) {
    return std::tie(x.tag, x.a, x.g, x.gs, x.u) < std::tie(y.tag, y.a, y.g, y.gs, y.u);
  }
};

/// Exact finite linear combination of normal-form monomials; canonical sparse form.
class Element {
 public:
  using TermMap = std::map<Monomial, LaurentCoefficient>;

  explicit Element(AlgebraTag tag = AlgebraTag::SUq2) : tag_(tag) {}

  AlgebraTag tag() const { return tag_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, const LaurentCoefficient& c) {
    if (m.tag != tag_) throw AlgebraError("Element::add: algebra tag mismatch");
    if (c.isZero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  friend bool operator==(const Element& x, const Element& y) {
    return x.tag_ == y.tag_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

 private:
  AlgebraTag tag_;
  TermMap terms_;
};

Element zeroElement(AlgebraTag tag);
Element unitElement(AlgebraTag tag);
Element scalarElement(AlgebraTag tag, const LaurentCoefficient& c);
Element monomialElement(const Monomial& m, const LaurentCoefficient& c = LaurentCoefficient::one());
Element generatorElement(AlgebraTag tag, Gen gen);

Element add(const Element& x, const Element& y);
Element subtract(const Element& x, const Element& y);
Element scale(const LaurentCoefficient& c, const Element& x);
Element negate(const Element& x);

/// Normal-form product modulo the relation ideal. Throws on tag mismatch.
Element multiply(const Element& x, const Element& y);

/// Right-multiplication by a single generator; the workhorse of the rewriting.
Element rightMulGen(const Element& x, Gen gen);

/// Conjugate-linear anti-homomorphism, involutive.
Element adjoint(const Element& x);

int totalDegree(const Element& x);

/// Valid generators for an algebra tag (used by the parser and the random corpus).
std::vector<Gen> algebraGenerators(AlgebraTag tag);

/// Finite sum of pure tensors over one algebra; canonical sparse form.
class TensorElement {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using TermMap = std::map<Key, LaurentCoefficient>;

  explicit TensorElement(AlgebraTag tag = AlgebraTag::SUq2) : tag_(tag) {}

  AlgebraTag tag() const { return tag_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void add(const Monomial& m1, const Monomial& m2, const LaurentCoefficient& c) {
    if (m1.tag != tag_ || m2.tag != tag_) throw AlgebraError("TensorElement::add: tag mismatch");
    if (c.isZero()) return;
    Key k{m1, m2};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[k] = c;
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  friend bool operator==(const TensorElement& x, const TensorElement& y) {
    return x.tag_ == y.tag_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const TensorElement& x, const TensorElement& y) { return !(x == y); }

 private:
  AlgebraTag tag_;
  TermMap terms_;
};

TensorElement tensorOf(const Element& x, const Element& y);
TensorElement tensorAdd(const TensorElement& x, const TensorElement& y);
TensorElement tensorScale(const LaurentCoefficient& c, const TensorElement& x);
TensorElement tensorMultiply(const TensorElement& x, const TensorElement& y);
TensorElement tensorAdjoint(const TensorElement& x);  // leg-wise adjoint

}  // namespace qgl
