#include "qgl/algebra.hpp"

#include <cstdlib>

namespace qgl {

std::string tagName(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::SUq2: return "SUq2";
    case AlgebraTag::GqTheta: return "GqTheta";
    case AlgebraTag::Torus: return "Torus";
    case AlgebraTag::Circle: return "Circle";
  }
  return "?";
}

Element zeroElement(AlgebraTag tag) { return Element(tag); }

Element unitElement(AlgebraTag tag) {
  Element e(tag);
  e.add(Monomial{tag, 0, 0, 0, 0}, LaurentCoefficient::one());
  return e;
}

Element scalarElement(AlgebraTag tag, const LaurentCoefficient& c) {
  Element e(tag);
  e.add(Monomial{tag, 0, 0, 0, 0}, c);
  return e;
}

Element monomialElement(const Monomial& m, const LaurentCoefficient& c) {
  Element e(m.tag);
  e.add(m, c);
  return e;
}

std::vector<Gen> algebraGenerators(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::SUq2: return {Gen::A, Gen::AStar, Gen::G, Gen::GStar};
    case AlgebraTag::GqTheta:
      return {Gen::A, Gen::AStar, Gen::G, Gen::GStar, Gen::U, Gen::UStar};
    case AlgebraTag::Torus: return {Gen::V, Gen::VStar, Gen::W, Gen::WStar};
    case AlgebraTag::Circle: return {Gen::Z, Gen::ZStar, Gen::U, Gen::UStar};
  }
  return {};
}

namespace {

void checkGenAllowed(AlgebraTag tag, Gen gen) {
  switch (gen) {
    case Gen::A:
    case Gen::AStar:
    case Gen::G:
    case Gen::GStar:
      if (tag == AlgebraTag::SUq2 || tag == AlgebraTag::GqTheta) return;
      break;
    case Gen::U:
    case Gen::UStar:
      if (tag == AlgebraTag::GqTheta || tag == AlgebraTag::Circle) return;
      break;
    case Gen::V:
    case Gen::VStar:
    case Gen::W:
    case Gen::WStar:
      if (tag == AlgebraTag::Torus) return;
      break;
    case Gen::Z:
    case Gen::ZStar:
      if (tag == AlgebraTag::Circle) return;
      break;
  }
  throw AlgebraError("generator not available in algebra " + tagName(tag));
}

// Right-multiply one normal-form monomial by one generator.
//
// Commutation rules used (all exact consequences of the defining relations):
//   alpha gamma   = q gamma alpha        alpha gamma*  = q gamma* alpha
//   alpha* gamma  = q^-1 gamma alpha*    alpha* gamma* = q^-1 gamma* alpha*
//   gamma u       = zeta   u gamma       gamma* u      = zeta^-1 u gamma*
//   alpha u       = u alpha
//   alpha alpha*  = 1 - q^2 gamma gamma*
//   alpha* alpha  = 1 - gamma* gamma
//   torus:  w v = zeta v w
void monoTimesGen(const Monomial& m, const LaurentCoefficient& c, Gen gen, Element& out) {
  AlgebraTag tag = m.tag;
  switch (tag) {
    case AlgebraTag::Torus: {
      Monomial r = m;  // r.a = vExp, r.u = wExp
      switch (gen) {
        case Gen::V:
        case Gen::VStar: {
          int d = gen == Gen::V ? 1 : -1;
          // w^b v^{d} = zeta^{b d} v^{d} w^b
          r.a += d;
          out.add(r, c * LaurentCoefficient::zetaPower(m.u * d));
          return;
        }
        case Gen::W:
        case Gen::WStar:
          r.u += gen == Gen::W ? 1 : -1;
          out.add(r, c);
          return;
        default: break;
      }
      throw AlgebraError("monoTimesGen: bad torus generator");
    }
    case AlgebraTag::Circle: {
      Monomial r = m;  // commutative: r.a = zExp, r.u = uExp
      switch (gen) {
        case Gen::Z: r.a += 1; break;
        case Gen::ZStar: r.a -= 1; break;
        case Gen::U: r.u += 1; break;
        case Gen::UStar: r.u -= 1; break;
        default: throw AlgebraError("monoTimesGen: bad circle generator");
      }
      out.add(r, c);
      return;
    }
    default: break;
  }

  switch (gen) {
    case Gen::U:
    case Gen::UStar: {
      Monomial r = m;
      r.u += gen == Gen::U ? 1 : -1;
      out.add(r, c);
      return;
    }
    case Gen::G: {
      // u^l gamma = zeta^{-l} gamma u^l; gamma joins the gamma block.
      Monomial r = m;
      r.g += 1;
      out.add(r, c * LaurentCoefficient::zetaPower(-m.u));
      return;
    }
    case Gen::GStar: {
      Monomial r = m;
      r.gs += 1;
      out.add(r, c * LaurentCoefficient::zetaPower(m.u));
      return;
    }
    case Gen::A: {
      // Move alpha left past u (free) and past gamma^g gamma*^gs: picks up q^{-(g+gs)}.
      LaurentCoefficient cc = c * LaurentCoefficient::qPower(-(m.g + m.gs));
      if (m.a >= 0) {
        Monomial r = m;
        r.a += 1;
        out.add(r, cc);
      } else {
        // alpha^a alpha = alpha^{a+1} (1 - gamma* gamma), a < 0
        Monomial r1 = m;
        r1.a += 1;
        out.add(r1, cc);
        Monomial r2 = r1;
        r2.g += 1;
        r2.gs += 1;
        out.add(r2, -cc);
      }
      return;
    }
    case Gen::AStar: {
      LaurentCoefficient cc = c * LaurentCoefficient::qPower(m.g + m.gs);
      if (m.a <= 0) {
        Monomial r = m;
        r.a -= 1;
        out.add(r, cc);
      } else {
        // alpha^a alpha* = alpha^{a-1} (1 - q^2 gamma gamma*), a > 0
        Monomial r1 = m;
        r1.a -= 1;
        out.add(r1, cc);
        Monomial r2 = r1;
        r2.g += 1;
        r2.gs += 1;
        out.add(r2, -(cc * LaurentCoefficient::qPower(2)));
      }
      return;
    }
    default: throw AlgebraError("monoTimesGen: bad generator for " + tagName(tag));
  }
}

// Normal-form product of two monomials, accumulated into `out`.
void monoTimesMono(const Monomial& x, const LaurentCoefficient& cx, const Monomial& y,
                   const LaurentCoefficient& cy, Element& out) {
  LaurentCoefficient c = cx * cy;
  if (x.tag == AlgebraTag::Circle) {
    Monomial r = x;
    r.a += y.a;
    r.u += y.u;
    out.add(r, c);
    return;
  }
  if (x.tag == AlgebraTag::Torus) {
    // v^a1 w^b1 v^a2 w^b2 = zeta^{b1 a2} v^{a1+a2} w^{b1+b2}
    Monomial r = x;
    r.a += y.a;
    r.u += y.u;
    out.add(r, c * LaurentCoefficient::zetaPower(x.u * y.a));
    return;
  }
  // SUq2 / GqTheta. Fast path when no alpha/alpha* pair cancels:
  //   x y = q^{-y.a (x.g+x.gs)} zeta^{x.u (y.gs - y.g)} alpha^{x.a+y.a} gamma^{..} ...
  if (x.a == 0 || y.a == 0 || (x.a > 0) == (y.a > 0)) {
    Monomial r = x;
    r.a += y.a;
    r.g += y.g;
    r.gs += y.gs;
    r.u += y.u;
    LaurentCoefficient f = LaurentCoefficient::term(-y.a * (x.g + x.gs), x.u * (y.gs - y.g),
                                                    GaussianRational(1));
    out.add(r, c * f);
    return;
  }
  // General path: apply y's letters one by one.
  Element acc = monomialElement(x, c);
  auto apply = [&acc](Gen g, int count) {
    for (int i = 0; i < count; ++i) acc = rightMulGen(acc, g);
  };
  apply(y.a > 0 ? Gen::A : Gen::AStar, std::abs(y.a));
  apply(Gen::G, y.g);
  apply(Gen::GStar, y.gs);
  apply(y.u > 0 ? Gen::U : Gen::UStar, std::abs(y.u));
  for (const auto& [m, cc] : acc.terms()) out.add(m, cc);
}

}  // namespace

Element rightMulGen(const Element& x, Gen gen) {
  checkGenAllowed(x.tag(), gen);
  Element out(x.tag());
  for (const auto& [m, c] : x.terms()) monoTimesGen(m, c, gen, out);
  return out;
}

Element generatorElement(AlgebraTag tag, Gen gen) {
  return rightMulGen(unitElement(tag), gen);
}

Element multiply(const Element& x, const Element& y) {
  if (x.tag() != y.tag()) throw AlgebraError("multiply: algebra tag mismatch");
  Element out(x.tag());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) monoTimesMono(mx, cx, my, cy, out);
  return out;
}

Element add(const Element& x, const Element& y) {
  if (x.tag() != y.tag()) throw AlgebraError("add: algebra tag mismatch");
  Element out = x;
  for (const auto& [m, c] : y.terms()) out.add(m, c);
  return out;
}

Element subtract(const Element& x, const Element& y) {
  if (x.tag() != y.tag()) throw AlgebraError("subtract: algebra tag mismatch");
  Element out = x;
  for (const auto& [m, c] : y.terms()) out.add(m, -c);
  return out;
}

Element scale(const LaurentCoefficient& c, const Element& x) {
  Element out(x.tag());
  for (const auto& [m, cm] : x.terms()) out.add(m, c * cm);
  return out;
}

Element negate(const Element& x) { return scale(-LaurentCoefficient::one(), x); }

Element adjoint(const Element& x) {
  Element out(x.tag());
  for (const auto& [m, c] : x.terms()) {
    // (g1 g2 ... gn)* = gn* ... g1*: rebuild in reversed order with starred letters.
    Element acc = unitElement(x.tag());
    auto apply = [&acc](Gen g, int count) {
      for (int i = 0; i < count; ++i) acc = rightMulGen(acc, g);
    };
    if (x.tag() == AlgebraTag::Torus) {
      apply(m.u >= 0 ? Gen::WStar : Gen::W, std::abs(m.u));
      apply(m.a >= 0 ? Gen::VStar : Gen::V, std::abs(m.a));
    } else if (x.tag() == AlgebraTag::Circle) {
      apply(m.u >= 0 ? Gen::UStar : Gen::U, std::abs(m.u));
      apply(m.a >= 0 ? Gen::ZStar : Gen::Z, std::abs(m.a));
    } else {
      apply(m.u >= 0 ? Gen::UStar : Gen::U, std::abs(m.u));
      apply(Gen::G, m.gs);       // (gamma*)* = gamma
      apply(Gen::GStar, m.g);
      apply(m.a >= 0 ? Gen::AStar : Gen::A, std::abs(m.a));
    }
    LaurentCoefficient cc = c.conj();
    for (const auto& [rm, rc] : acc.terms()) out.add(rm, cc * rc);
  }
  return out;
}

int totalDegree(const Element& x) {
  int d = 0;
  for (const auto& [m, c] : x.terms()) d = std::max(d, m.totalDegree());
  return d;
}

TensorElement tensorOf(const Element& x, const Element& y) {
  if (x.tag() != y.tag()) throw AlgebraError("tensorOf: tag mismatch");
  TensorElement t(x.tag());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) t.add(mx, my, cx * cy);
  return t;
}

TensorElement tensorAdd(const TensorElement& x, const TensorElement& y) {
  if (x.tag() != y.tag()) throw AlgebraError("tensorAdd: tag mismatch");
  TensorElement out = x;
  for (const auto& [k, c] : y.terms()) out.add(k.first, k.second, c);
  return out;
}

TensorElement tensorScale(const LaurentCoefficient& c, const TensorElement& x) {
  TensorElement out(x.tag());
  for (const auto& [k, cm] : x.terms()) out.add(k.first, k.second, c * cm);
  return out;
}

TensorElement tensorMultiply(const TensorElement& x, const TensorElement& y) {
  if (x.tag() != y.tag()) throw AlgebraError("tensorMultiply: tag mismatch");
  TensorElement out(x.tag());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      Element left = multiply(monomialElement(kx.first), monomialElement(ky.first));
      Element right = multiply(monomialElement(kx.second), monomialElement(ky.second));
      LaurentCoefficient c = cx * cy;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) out.add(ml, mr, c * cl * cr);
    }
  }
  return out;
}

TensorElement tensorAdjoint(const TensorElement& x) {
  TensorElement out(x.tag());
  for (const auto& [k, c] : x.terms()) {
    Element left = adjoint(monomialElement(k.first));
    Element right = adjoint(monomialElement(k.second));
    LaurentCoefficient cc = c.conj();
    for (const auto& [ml, cl] : left.terms())
      for (const auto& [mr, cr] : right.terms()) out.add(ml, mr, cc * cl * cr);
  }
  return out;
}

}  // namespace qgl
