#include <doctest.h>

#include "errors.hpp"
#include "rational.hpp"

using namespace cg;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(12, 3).str() == "4");
}

TEST_CASE("rational parsing round-trips and rejects junk") {
  CHECK(Rational::parse("5/8").str() == "5/8");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  CHECK_THROWS_AS(Rational::parse("3/0"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK(midpoint(Rational(0), Rational(1)).str() == "1/2");
}

TEST_CASE("decimal rendering keeps 12 significant digits") {
  CHECK(Rational(1, 2).decimal(12) == "0.5");
  CHECK(Rational(1, 3).decimal(12) == "0.333333333333");
  CHECK(Rational(2, 3).decimal(12) == "0.666666666667");
  CHECK(Rational(-13, 4).decimal(12) == "-3.25");
  CHECK(Rational(1000000).decimal(3) == "1e6");
  CHECK(Rational(1, 100000).decimal(3) == "1e-5");
  CHECK(Rational(0).decimal(12) == "0");
  CHECK(Rational(999, 1000).decimal(2) == "1");
}

TEST_CASE("advisory denominator limit aborts runaway values") {
  set_denominator_limit_bits(8);
  CHECK_THROWS_AS(Rational(1, 3) * Rational(1, 257), Error);
  CHECK((Rational(1, 3) * Rational(3, 7)).str() == "1/7");
  set_denominator_limit_bits(0);
  CHECK((Rational(1, 3) * Rational(1, 257)).str() == "1/771");
}
