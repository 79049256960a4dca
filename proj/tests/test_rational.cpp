#include "doctest.h"
#include "migsched/rational.hpp"

using namespace migsched;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1.75") == Rational(7, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("to_fraction always prints num/den") {
  CHECK(to_fraction(Rational(3)) == "3/1");
  CHECK(to_fraction(Rational(15, 11)) == "15/11");
}

TEST_CASE("floor and ceil") {
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(4)) == 4);
}

TEST_CASE("to_significant rounds half away from zero") {
  CHECK(to_significant(Rational(4, 3), 5) == "1.3333");
  CHECK(to_significant(Rational(2, 3), 3) == "0.667");
  CHECK(to_significant(Rational(1), 4) == "1.000");
}
