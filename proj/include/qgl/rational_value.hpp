#pragma once

#include "qgl/laurent.hpp"
#include "qgl/rational.hpp"

#include <string>
#include <vector>

namespace qgl {

/// Polynomial in q with Gaussian-rational coefficients, ascending degree, trimmed.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly zero() { return {}; }
  static QPoly one() { return constant(GaussianRational(1)); }
  static QPoly constant(const GaussianRational& v) {
    QPoly p;
    if (!v.isZero()) p.c_ = {v};
    return p;
  }
  static QPoly monomial(int deg, const GaussianRational& v = GaussianRational(1));

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const GaussianRational& leading() const { return c_.back(); }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// Division with remainder over the field Q(i).
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  static QPoly gcd(QPoly a, QPoly b);  // monic

  GaussianRational evalAt(const BigRational& q) const;
  std::string toString() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
  }
  std::vector<GaussianRational> c_;
};

/// Reduced fraction of q-polynomials with monic denominator; zeta-free by construction.
class RationalValue {
 public:
  RationalValue() : num_(QPoly::zero()), den_(QPoly::one()) {}
  RationalValue(QPoly num, QPoly den);

  static RationalValue zero() { return {}; }
  static RationalValue one() { return {QPoly::one(), QPoly::one()}; }
  static RationalValue constant(const GaussianRational& v) {
    return {QPoly::constant(v), QPoly::one()};
  }
  /// From a zeta-free Laurent coefficient (q^{-k} terms become denominator powers).
  static RationalValue fromLaurent(const LaurentCoefficient& c);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }

  friend RationalValue operator+(const RationalValue& a, const RationalValue& b);
  friend RationalValue operator-(const RationalValue& a, const RationalValue& b);
  friend RationalValue operator-(const RationalValue& a);
  friend RationalValue operator*(const RationalValue& a, const RationalValue& b);
  friend RationalValue operator/(const RationalValue& a, const RationalValue& b);
  friend bool operator==(const RationalValue& a, const RationalValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalValue& a, const RationalValue& b) { return !(a == b); }

  GaussianRational evalAt(const BigRational& q) const;
  std::string toString() const;

 private:
  void reduce();
  QPoly num_, den_;
};

}  // namespace qgl
