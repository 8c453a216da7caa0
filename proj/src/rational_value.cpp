#include "qgl/rational_value.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgl {

QPoly QPoly::monomial(int deg, const GaussianRational& v) {
  if (deg < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  QPoly p;
  if (v.isZero()) return p;
  p.c_.assign(static_cast<std::size_t>(deg) + 1, GaussianRational(0));
  p.c_.back() = v;
  return p;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), GaussianRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator-(const QPoly& a) {
  QPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.isZero() || b.isZero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.isZero()) throw std::domain_error("QPoly::divmod: division by zero polynomial");
  quot = QPoly::zero();
  rem = a;
  while (!rem.isZero() && rem.degree() >= b.degree()) {
    int d = rem.degree() - b.degree();
    GaussianRational f = rem.leading() / b.leading();
    QPoly t = QPoly::monomial(d, f);
    quot = quot + t;
    rem = rem - t * b;
  }
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.isZero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.isZero()) return a;
  // Make monic.
  GaussianRational lead = a.leading();
  for (auto& c : a.c_) c = c / lead;
  return a;
}

GaussianRational QPoly::evalAt(const BigRational& q) const {
  GaussianRational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * GaussianRational(q) + *it;
  return v;
}

std::string QPoly::toString() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int d = degree(); d >= 0; --d) {
    const auto& c = c_[static_cast<std::size_t>(d)];
    if (c.isZero()) continue;
    if (!s.empty()) s += " + ";
    if (d == 0) {
      s += qgl::toText(c);
    } else {
      if (!(c == GaussianRational(1))) s += qgl::toText(c) + " ";
      s += d == 1 ? "q" : "q^" + std::to_string(d);
    }
  }
  return s;
}

RationalValue::RationalValue(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw std::domain_error("RationalValue: zero denominator");
  reduce();
}

void RationalValue::reduce() {
  if (num_.isZero()) {
    den_ = QPoly::one();
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    QPoly q, r;
    QPoly::divmod(num_, g, q, r);
    num_ = q;
    QPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  GaussianRational lead = den_.leading();
  if (!(lead == GaussianRational(1))) {
    std::vector<GaussianRational> nc = num_.coeffs(), dc = den_.coeffs();
    for (auto& c : nc) c = c / lead;
    for (auto& c : dc) c = c / lead;
    num_ = QPoly(std::move(nc));
    den_ = QPoly(std::move(dc));
  }
}

RationalValue RationalValue::fromLaurent(const LaurentCoefficient& c) {
  if (!c.isZetaFree())
    throw std::domain_error("RationalValue::fromLaurent: coefficient involves zeta");
  int minExp = 0;
  for (const auto& [k, v] : c.terms()) minExp = std::min(minExp, k.first);
  // Multiply through by q^{-minExp} and keep it in the denominator.
  std::vector<GaussianRational> nc;
  for (const auto& [k, v] : c.terms()) {
    std::size_t deg = static_cast<std::size_t>(k.first - minExp);
    if (nc.size() <= deg) nc.resize(deg + 1, GaussianRational(0));
    nc[deg] += v;
  }
  return {QPoly(std::move(nc)), QPoly::monomial(-minExp)};
}

RationalValue operator+(const RationalValue& a, const RationalValue& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
RationalValue operator-(const RationalValue& a, const RationalValue& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
RationalValue operator-(const RationalValue& a) { return {-a.num_, a.den_}; }
RationalValue operator*(const RationalValue& a, const RationalValue& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}
RationalValue operator/(const RationalValue& a, const RationalValue& b) {
  if (b.isZero()) throw std::domain_error("RationalValue: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

GaussianRational RationalValue::evalAt(const BigRational& q) const {
  GaussianRational d = den_.evalAt(q);
  if (d.isZero()) throw std::domain_error("RationalValue::evalAt: pole at q value");
  return num_.evalAt(q) / d;
}

std::string RationalValue::toString() const {
  if (num_.isZero()) return "0";
  if (den_ == QPoly::one()) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

}  // namespace qgl
