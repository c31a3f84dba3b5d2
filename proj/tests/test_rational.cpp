#include "doctest.h"

#include "dirosc/rational.hpp"

using dirosc::BigInt;
using dirosc::GaussianRational;
using dirosc::Rational;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
  Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), dirosc::Error);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((-a).str() == "-1/3");
  CHECK_THROWS_AS(a / Rational(0), dirosc::Error);
}

TEST_CASE("no overflow: arbitrary precision") {
  Rational big(BigInt("123456789123456789123456789"), BigInt(1));
  Rational r = big * big;
  CHECK(r.numerator() == BigInt("15241578780673678546105778281054720515622620750190521"));
}

TEST_CASE("gaussian rational algebra") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational z(Rational(1, 2), Rational(-3, 4));
  CHECK(z * z.conj() == GaussianRational(Rational(13, 16)));
  CHECK((z + z.conj()).is_real());
  CHECK(GaussianRational(0, 1).is_imaginary());
}

TEST_CASE("gaussian rational printing") {
  CHECK(GaussianRational(0).str() == "0");
  CHECK(GaussianRational(-3).str() == "-3");
  CHECK(GaussianRational(0, 1).str() == "i");
  CHECK(GaussianRational(0, -1).str() == "-i");
  CHECK(GaussianRational(Rational(0), Rational(3, 4)).str() == "3/4*i");
  CHECK(GaussianRational(Rational(1), Rational(-1, 2)).str() == "(1 - 1/2*i)");
}
