#include "qgl/hopf.hpp"

namespace qgl {

namespace {

void requireCoalgebraTag(const Element& x, const char* op) {
  if (x.tag() != AlgebraTag::SUq2 && x.tag() != AlgebraTag::GqTheta)
    throw AlgebraError(std::string(op) + ": algebra " + tagName(x.tag()) + " has no coproduct here");
}

// Delta on single generators, per (3.2) and group-likeness of u.
TensorElement genCoproduct(AlgebraTag tag, Gen gen) {
  TensorElement t(tag);
  auto mono = [tag](int a, int g, int gs, int u) { return Monomial{tag, a, g, gs, u}; };
  LaurentCoefficient one = LaurentCoefficient::one();
  LaurentCoefficient mq = -LaurentCoefficient::qPower(1);
  switch (gen) {
    case Gen::A:  // alpha (x) alpha - q gamma* (x) gamma
      t.add(mono(1, 0, 0, 0), mono(1, 0, 0, 0), one);
      t.add(mono(0, 0, 1, 0), mono(0, 1, 0, 0), mq);
      return t;
    case Gen::AStar:  // leg-wise adjoint: alpha* (x) alpha* - q gamma (x) gamma*
      t.add(mono(-1, 0, 0, 0), mono(-1, 0, 0, 0), one);
      t.add(mono(0, 1, 0, 0), mono(0, 0, 1, 0), mq);
      return t;
    case Gen::G:  // gamma (x) alpha + alpha* (x) gamma
      t.add(mono(0, 1, 0, 0), mono(1, 0, 0, 0), one);
      t.add(mono(-1, 0, 0, 0), mono(0, 1, 0, 0), one);
      return t;
    case Gen::GStar:  // gamma* (x) alpha* + alpha (x) gamma*
      t.add(mono(0, 0, 1, 0), mono(-1, 0, 0, 0), one);
      t.add(mono(1, 0, 0, 0), mono(0, 0, 1, 0), one);
      return t;
    case Gen::U:
      t.add(mono(0, 0, 0, 1), mono(0, 0, 0, 1), one);
      return t;
    case Gen::UStar:
      t.add(mono(0, 0, 0, -1), mono(0, 0, 0, -1), one);
      return t;
    default: throw AlgebraError("genCoproduct: unsupported generator");
  }
}

TensorElement tensorUnit(AlgebraTag tag) {
  TensorElement t(tag);
  t.add(Monomial{tag, 0, 0, 0, 0}, Monomial{tag, 0, 0, 0, 0}, LaurentCoefficient::one());
  return t;
}

}  // namespace

TensorElement coproduct(const Element& x) {
  requireCoalgebraTag(x, "coproduct");
  AlgebraTag tag = x.tag();
  TensorElement out(tag);
  for (const auto& [m, c] : x.terms()) {
    TensorElement acc = tensorUnit(tag);
    auto apply = [&](Gen g, int count) {
      if (count == 0) return;
      TensorElement gc = genCoproduct(tag, g);
      for (int i = 0; i < count; ++i) acc = tensorMultiply(acc, gc);
    };
    apply(m.a >= 0 ? Gen::A : Gen::AStar, std::abs(m.a));
    apply(Gen::G, m.g);
    apply(Gen::GStar, m.gs);
    apply(m.u >= 0 ? Gen::U : Gen::UStar, std::abs(m.u));
    out = tensorAdd(out, tensorScale(c, acc));
  }
  return out;
}

LaurentCoefficient counit(const Element& x) {
  requireCoalgebraTag(x, "counit");
  // eps(alpha^k u^l) = 1, eps vanishes on anything containing gamma or gamma*.
  LaurentCoefficient r;
  for (const auto& [m, c] : x.terms())
    if (m.g == 0 && m.gs == 0) r += c;
  return r;
}

Element antipode(const Element& x) {
  requireCoalgebraTag(x, "antipode");
  AlgebraTag tag = x.tag();
  const Element sGamma = scale(-LaurentCoefficient::qPower(1), generatorElement(tag, Gen::G));
  const Element sGammaStar =
      scale(-LaurentCoefficient::qPower(-1), generatorElement(tag, Gen::GStar));
  Element out(tag);
  for (const auto& [m, c] : x.terms()) {
    // Anti-homomorphism: images of the letters in reversed order.
    Element acc = unitElement(tag);
    auto applyGen = [&acc, tag](Gen g, int count) {
      for (int i = 0; i < count; ++i) acc = rightMulGen(acc, g);
    };
    applyGen(m.u >= 0 ? Gen::UStar : Gen::U, std::abs(m.u));  // S(u^l) = u^{-l}
    for (int i = 0; i < m.gs; ++i) acc = multiply(acc, sGammaStar);
    for (int i = 0; i < m.g; ++i) acc = multiply(acc, sGamma);
    applyGen(m.a >= 0 ? Gen::AStar : Gen::A, std::abs(m.a));  // S(alpha)=alpha*, S(alpha*)=alpha
    out = add(out, scale(c, acc));
  }
  return out;
}

int tDegree(const Monomial& m) { return m.a + m.g - m.gs; }

Element invariantPart(const Element& x) {
  if (x.tag() != AlgebraTag::SUq2) throw AlgebraError("invariantPart: SUq2 elements only");
  Element out(x.tag());
  for (const auto& [m, c] : x.terms())
    if (tDegree(m) == 0) out.add(m, c);
  return out;
}

Element quotientToCircle(const Element& x) {
  Element out(AlgebraTag::Circle);
  for (const auto& [m, c] : x.terms()) {
    switch (x.tag()) {
      case AlgebraTag::SUq2:
      case AlgebraTag::GqTheta:
        if (m.g > 0 || m.gs > 0) continue;  // gamma -> 0
        out.add(Monomial{AlgebraTag::Circle, m.a, 0, 0, m.u}, c);
        break;
      case AlgebraTag::Circle: out.add(m, c); break;
      default: throw AlgebraError("quotientToCircle: unsupported algebra");
    }
  }
  return out;
}

namespace {

Element contractTensor(const TensorElement& t, bool antipodeFirstLeg, bool antipodeSecondLeg) {
  Element out(t.tag());
  for (const auto& [k, c] : t.terms()) {
    Element l = monomialElement(k.first);
    Element r = monomialElement(k.second);
    if (antipodeFirstLeg) l = antipode(l);
    if (antipodeSecondLeg) r = antipode(r);
    out = add(out, scale(c, multiply(l, r)));
  }
  return out;
}

}  // namespace

Element antipodeAxiomLeft(const Element& x) { return contractTensor(coproduct(x), true, false); }
Element antipodeAxiomRight(const Element& x) { return contractTensor(coproduct(x), false, true); }

Element counitAxiomLeft(const Element& x) {
  TensorElement t = coproduct(x);
  Element out(x.tag());
  for (const auto& [k, c] : t.terms())
    out.add(k.second, c * counit(monomialElement(k.first)));
  return out;
}

Element counitAxiomRight(const Element& x) {
  TensorElement t = coproduct(x);
  Element out(x.tag());
  for (const auto& [k, c] : t.terms())
    out.add(k.first, c * counit(monomialElement(k.second)));
  return out;
}

Tensor3Element coproductLeftLeg(const TensorElement& t) {
  Tensor3Element out(t.tag());
  for (const auto& [k, c] : t.terms()) {
    TensorElement d = coproduct(monomialElement(k.first));
    for (const auto& [dk, dc] : d.terms()) out.add(dk.first, dk.second, k.second, c * dc);
  }
  return out;
}

Tensor3Element coproductRightLeg(const TensorElement& t) {
  Tensor3Element out(t.tag());
  for (const auto& [k, c] : t.terms()) {
    TensorElement d = coproduct(monomialElement(k.second));
    for (const auto& [dk, dc] : d.terms()) out.add(k.first, dk.first, dk.second, c * dc);
  }
  return out;
}

bool circleInvarianceHolds(const Element& x) {
  TensorElement t = coproduct(x);
  // Accumulate (id (x) quotient) Delta(x) as map (monomial, circle monomial) -> coeff.
  std::map<std::pair<Monomial, Monomial>, LaurentCoefficient> acc;
  auto addTerm = [&acc](const Monomial& m1, const Monomial& m2, const LaurentCoefficient& c) {
    auto key = std::make_pair(m1, m2);
    auto it = acc.find(key);
    if (it == acc.end()) {
      if (!c.isZero()) acc[key] = c;
    } else {
      it->second += c;
      if (it->second.isZero()) acc.erase(it);
    }
  };
  for (const auto& [k, c] : t.terms()) {
    Element q = quotientToCircle(monomialElement(k.second));
    for (const auto& [qm, qc] : q.terms()) addTerm(k.first, qm, c * qc);
  }
  // Subtract x (x) 1.
  Monomial circleUnit{AlgebraTag::Circle, 0, 0, 0, 0};
  for (const auto& [m, c] : x.terms()) addTerm(m, circleUnit, -c);
  return acc.empty();
}

}  // namespace qgl
