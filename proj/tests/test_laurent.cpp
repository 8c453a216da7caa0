#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/laurent.hpp"
#include "qgl/rational_value.hpp"

using namespace qgl;

TEST_CASE("rationalFromDouble is exact") {
  CHECK(rationalFromDouble(0.5) == BigRational(1, 2));
  CHECK(rationalFromDouble(-0.625) == BigRational(-5, 8));
  CHECK(rationalFromDouble(3.0) == BigRational(3));
  CHECK(rationalFromDouble(0.0) == BigRational(0));
  // Round-trip: the rational of a double converts back to the same double.
  double x = 0.1;
  CHECK(static_cast<double>(rationalFromDouble(x)) == x);
}

TEST_CASE("gaussian rational field ops") {
  GaussianRational a(BigRational(1, 2), BigRational(3));
  GaussianRational b(BigRational(2), BigRational(-1, 3));
  CHECK((a * b) / b == a);
  CHECK(a + (-a) == GaussianRational(0));
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).isReal());
}

TEST_CASE("laurent coefficient arithmetic and conj") {
  LaurentCoefficient x = LaurentCoefficient::qPower(2) + LaurentCoefficient::zetaPower(-1);
  LaurentCoefficient y = LaurentCoefficient::term(-1, 1, GaussianRational::i());
  CHECK(x * y == y * x);
  CHECK((x - x).isZero());
  // conj negates the zeta exponent and conjugates the scalar
  LaurentCoefficient c = y.conj();
  CHECK(c.terms().begin()->first == LaurentCoefficient::Key{-1, -1});
  CHECK(c.terms().begin()->second == -GaussianRational::i());
  CHECK(y.conj().conj() == y);
}

TEST_CASE("substituteQ and evalNumeric agree") {
  LaurentCoefficient x = LaurentCoefficient::qPower(-2) + LaurentCoefficient::qPower(3);
  LaurentCoefficient s = x.substituteQ(BigRational(1, 2));
  CHECK(s == LaurentCoefficient::scalar(GaussianRational(BigRational(4) + BigRational(1, 8))));
  auto v = x.evalNumeric(0.5, {1.0, 0.0});
  CHECK(v.real() == doctest::Approx(4.125).epsilon(1e-15));
  CHECK(v.imag() == 0.0);
}

TEST_CASE("qpoly gcd and rational value reduction") {
  // (1 - q^2) / (1 - q) reduces to 1 + q
  QPoly num({GaussianRational(1), GaussianRational(0), GaussianRational(-1)});
  QPoly den({GaussianRational(1), GaussianRational(-1)});
  RationalValue r(num, den);
  QPoly expected({GaussianRational(1), GaussianRational(1)});
  CHECK(r == RationalValue(expected, QPoly::one()));
  CHECK(r.evalAt(BigRational(1, 3)) == GaussianRational(BigRational(4, 3)));
}

TEST_CASE("rational value field ops") {
  RationalValue q(QPoly::monomial(1), QPoly::one());
  RationalValue one = RationalValue::one();
  RationalValue a = one / (one - q * q);  // 1/(1-q^2)
  CHECK(a * (one - q * q) == one);
  CHECK((a - a).isZero());
  RationalValue half = RationalValue::constant(GaussianRational(BigRational(1, 2)));
  CHECK((half + half) == one);
}

TEST_CASE("fromLaurent moves negative powers to the denominator") {
  LaurentCoefficient x = LaurentCoefficient::qPower(-2);
  RationalValue r = RationalValue::fromLaurent(x);
  CHECK(r.evalAt(BigRational(1, 2)) == GaussianRational(4));
  CHECK_THROWS(RationalValue::fromLaurent(LaurentCoefficient::zetaPower(1)));
}
