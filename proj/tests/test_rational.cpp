#include <doctest.h>

#include <limits>

#include "frobmean/rational.hpp"
#include "frobmean/surd.hpp"

using namespace frobmean;

TEST_CASE("rational normalizes and compares exactly") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 7) + Rational(3, 5) == Rational(31, 35));
  CHECK(Rational(2, 7).inverse() == Rational(7, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(9, 3).str() == "3");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse accepts only integer ratios") {
  CHECK(Rational::parse("3/5") == Rational(3, 5));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS(Rational::parse("0.5"));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * Rational(2), OverflowError);
  CHECK_THROWS_AS(big + Rational(1), OverflowError);
  CHECK(big * Rational(1, 2) == Rational(std::numeric_limits<std::int64_t>::max(), 2));
}

TEST_CASE("surd sign and ordering") {
  const auto r5 = QuadraticSurd::root(5);
  CHECK(r5 > Rational(2));
  CHECK(r5 < Rational(9, 4));
  CHECK((r5 - Rational(2)).sign() == 1);
  CHECK((Rational(2) - r5).sign() == -1);
  CHECK(r5 * r5 == Rational(5));
  CHECK((Rational(1) / (r5 - Rational(2))) == r5 + Rational(2));
  CHECK(QuadraticSurd::root(49, Rational(1, 7)) == Rational(1));
  CHECK_THROWS((r5 + QuadraticSurd::root(6)));
}
