#include <doctest.h>

#include "mcvc/rational.hpp"

using mcvc::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(3, 2) == Rational(-3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("rational parsing") {
  CHECK(Rational::from_decimal("2.9") == Rational(29, 10));
  CHECK(Rational::from_decimal("-0.125") == Rational(-1, 8));
  CHECK(Rational::from_decimal(".5") == Rational(1, 2));
  CHECK(Rational::from_decimal("3") == Rational(3));
  CHECK(Rational::parse("1/3") == Rational(1, 3));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), mcvc::input_error);
  CHECK_THROWS_AS(Rational::from_decimal("abc"), mcvc::input_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), mcvc::input_error);
  CHECK_THROWS_AS(Rational(1, 0), mcvc::input_error);
}

TEST_CASE("rational rendering") {
  CHECK(Rational(29, 10).to_string() == "29/10");
  CHECK(Rational(3).to_string() == "3");
  CHECK(Rational(29, 10).to_decimal_string() == "2.9");
  CHECK(Rational(-1, 8).to_decimal_string() == "-0.125");
  CHECK(Rational(5).to_decimal_string() == "5");
  CHECK_THROWS_AS(Rational(1, 3).to_decimal_string(), mcvc::input_error);
}

TEST_CASE("ceil_recip") {
  CHECK(mcvc::ceil_recip(Rational(1, 2)) == 2);
  CHECK(mcvc::ceil_recip(Rational(1, 3)) == 3);
  CHECK(mcvc::ceil_recip(Rational(2, 5)) == 3);  // 1/eps = 2.5
  CHECK(mcvc::ceil_recip(Rational(1)) == 1);
  CHECK_THROWS_AS(mcvc::ceil_recip(Rational(0)), mcvc::input_error);
}
