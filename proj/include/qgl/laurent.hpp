#pragma once

#include "qgl/rational.hpp"

#include <complex>
#include <map>
#include <utility>

namespace qgl {

/// Exact scalar of the symbolic engine: a finite Gaussian-rational combination of
/// monomials q^a * zeta^b, with q a real central symbol and zeta unitary
/// (conjugation sends zeta to zeta^{-1}). Stored sparse with no zero terms.
class LaurentCoefficient {
 public:
  using Key = std::pair<int, int>;  // (qExp, zetaExp)
  using TermMap = std::map<Key, GaussianRational>;

  LaurentCoefficient() = default;

  static LaurentCoefficient zero() { return {}; }
  static LaurentCoefficient one() { return scalar(GaussianRational(1)); }
  static LaurentCoefficient scalar(const GaussianRational& c) {
    LaurentCoefficient r;
    if (!c.isZero()) r.terms_[{0, 0}] = c;
    return r;
  }
  static LaurentCoefficient qPower(int k, GaussianRational c = GaussianRational(1)) {
    LaurentCoefficient r;
    if (!c.isZero()) r.terms_[{k, 0}] = c;
    return r;
  }
  static LaurentCoefficient zetaPower(int b, GaussianRational c = GaussianRational(1)) {
    LaurentCoefficient r;
    if (!c.isZero()) r.terms_[{0, b}] = c;
    return r;
  }
  static LaurentCoefficient term(int qExp, int zetaExp, const GaussianRational& c) {
    LaurentCoefficient r;
    if (!c.isZero()) r.terms_[{qExp, zetaExp}] = c;
    return r;
  }

  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  bool isZetaFree() const {
    for (const auto& [k, c] : terms_)
      if (k.second != 0) return false;
    return true;
  }

  void addTerm(int qExp, int zetaExp, const GaussianRational& c) {
    if (c.isZero()) return;
    auto key = Key{qExp, zetaExp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_[key] = c;
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  friend LaurentCoefficient operator+(const LaurentCoefficient& a, const LaurentCoefficient& b) {
    LaurentCoefficient r = a;
    for (const auto& [k, c] : b.terms_) r.addTerm(k.first, k.second, c);
    return r;
  }
  friend LaurentCoefficient operator-(const LaurentCoefficient& a, const LaurentCoefficient& b) {
    LaurentCoefficient r = a;
    for (const auto& [k, c] : b.terms_) r.addTerm(k.first, k.second, -c);
    return r;
  }
  friend LaurentCoefficient operator-(const LaurentCoefficient& a) {
    LaurentCoefficient r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
    return r;
  }
  friend LaurentCoefficient operator*(const LaurentCoefficient& a, const LaurentCoefficient& b) {
    LaurentCoefficient r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.addTerm(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  LaurentCoefficient& operator+=(const LaurentCoefficient& b) { return *this = *this + b; }
  LaurentCoefficient& operator-=(const LaurentCoefficient& b) { return *this = *this - b; }
  LaurentCoefficient& operator*=(const LaurentCoefficient& b) { return *this = *this * b; }

  friend bool operator==(const LaurentCoefficient& a, const LaurentCoefficient& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentCoefficient& a, const LaurentCoefficient& b) {
    return !(a == b);
  }
  friend bool operator<(const LaurentCoefficient& a, const LaurentCoefficient& b) {
    return cmp(a, b) < 0;
  }

  /// *-conjugation: conjugates coefficients, fixes q, sends zeta to zeta^{-1}.
  LaurentCoefficient conj() const {
    LaurentCoefficient r;
    for (const auto& [k, c] : terms_) r.terms_[{k.first, -k.second}] = c.conj();
    return r;
  }

  /// Exact substitution q -> rational value; zeta stays symbolic.
  LaurentCoefficient substituteQ(const BigRational& q) const {
    LaurentCoefficient r;
    for (const auto& [k, c] : terms_) {
      BigRational qp(1);
      int e = k.first;
      BigRational base = e >= 0 ? q : BigRational(1) / q;
      for (int i = 0; i < std::abs(e); ++i) qp *= base;
      r.addTerm(0, k.second, c * GaussianRational(qp));
    }
    return r;
  }

  std::complex<double> evalNumeric(double q, std::complex<double> zeta) const {
    std::complex<double> v(0, 0);
    for (const auto& [k, c] : terms_) {
      std::complex<double> t(c.reDouble(), c.imDouble());
      t *= std::pow(q, k.first);
      t *= std::pow(zeta, k.second);
      v += t;
    }
    return v;
  }

 private:
  static int cmp(const LaurentCoefficient& a, const LaurentCoefficient& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
      if (!(ia->second == ib->second)) {
        if (ia->second.re != ib->second.re) return ia->second.re < ib->second.re ? -1 : 1;
        return ia->second.im < ib->second.im ? -1 : 1;
      }
    }
    return 0;
  }

  TermMap terms_;
};

}  // namespace qgl
