#include <doctest.h>

#include "baire/error.hh"
#include "baire/rational.hh"

using baire::Rational;

TEST_CASE("rational arithmetic is exact and reduced")
{
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK(Rational(4, 8).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK_THROWS_AS(a / Rational(0), baire::InvariantViolation);
}

TEST_CASE("rational parsing")
{
  CHECK(Rational::parse("3/9") == Rational(1, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), baire::InputError);
  CHECK_THROWS_AS(Rational::parse("x"), baire::InputError);
}

TEST_CASE("decimal rendering rounds half away from zero")
{
  CHECK(Rational(1, 3).decimal(4) == "0.3333");
  CHECK(Rational(2, 3).decimal(4) == "0.6667");
  CHECK(Rational(1, 8).decimal(2) == "0.13");
  CHECK(Rational(-1, 8).decimal(2) == "-0.13");
  CHECK(Rational(5).decimal(1) == "5.0");
}

TEST_CASE("ordering")
{
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
  CHECK(Rational(0).is_zero());
}
