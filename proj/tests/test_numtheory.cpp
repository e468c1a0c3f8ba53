#include <doctest.h>

#include "frobmean/numtheory.hpp"

using namespace frobmean;

TEST_CASE("sieve tables") {
  const auto t = build_tables(100);
  CHECK(t.mu(12) == 0);
  CHECK(t.phi(12) == 4);
  CHECK(t.mu(30) == -1);
  CHECK(t.phi(30) == 8);
  CHECK(t.mu(1) == 1);
  CHECK(t.phi(1) == 1);
  CHECK(t.mu(97) == -1);
  for (std::int64_t n = 1; n <= 100; ++n) {
    CHECK(t.mu(n) == mobius(n));
    CHECK(t.phi(n) == totient(n));
  }
  // above the limit the tables fall back to factorization
  CHECK(t.mu(1001) == -1);
  CHECK(t.phi(1001) == 720);
  CHECK_THROWS_AS(NumTheoryTables(0), std::invalid_argument);
}

TEST_CASE("divisor helpers") {
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(sigma_minus1(4) == Rational(7, 4));
  CHECK(sigma_minus1(6) == Rational(2));
  CHECK(delta_div(3, 12) == 1);
  CHECK(delta_div(5, 12) == 0);
  CHECK(totient_over_square_sum(2) == Rational(5, 4));
  CHECK(totient_over_square_sum(6) == Rational(1) + Rational(1, 4) + Rational(2, 9) + Rational(2, 36));
  CHECK_THROWS(divisors(0));
}

TEST_CASE("heilbronn sum equals phi(a)/a") {
  CHECK(heilbronn_lhs(1) == Rational(1));
  CHECK(heilbronn_lhs(12) == Rational(1, 3));
  for (std::int64_t a = 1; a <= 500; ++a) CHECK(heilbronn_lhs(a) == Rational(totient(a), a));
}
