#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact conversion of a finite double to a rational.
inline BigRational rationalFromDouble(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalFromDouble: non-finite input");
  if (x == 0.0) return BigRational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  for (int i = 0; i < 53 && mant != std::floor(mant); ++i) {
    mant *= 2.0;
    --exp;
  }
  BigInt num(static_cast<long long>(mant));
  BigRational r(num);
  if (exp > 0) {
    r *= BigRational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= BigRational(BigInt(1) << (-exp));
  }
  return r;
}

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
  BigRational re{0};
  BigRational im{0};

  GaussianRational() = default;
  GaussianRational(BigRational r) : re(std::move(r)) {}
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long long r) : re(r) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  bool isZero() const { return re == 0 && im == 0; }
  bool isReal() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    BigRational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  double reDouble() const { return static_cast<double>(re); }
  double imDouble() const { return static_cast<double>(im); }
};

inline std::string toText(const BigRational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

/// Grammar-compatible rendering: "3/2", "1/2i", "(3/2+1/2i)".
inline std::string toText(const GaussianRational& c) {
  if (c.im == 0) return toText(c.re);
  if (c.re == 0) return toText(c.im) + "i";
  std::string s = "(" + toText(c.re);
  if (c.im > 0) s += "+";
  s += toText(c.im) + "i)";
  return s;
}

}  // namespace qgl
