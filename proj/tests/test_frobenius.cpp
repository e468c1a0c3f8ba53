#include <doctest.h>

#include <numeric>

#include "frobmean/frobenius.hpp"

using namespace frobmean;

namespace {

// Values frozen from a plain representability sieve, independent of both routes.
struct Known {
  std::int64_t a, b, c, g;
};
constexpr Known kKnown[] = {
    {3, 5, 7, 4},      {5, 6, 7, 9},     {7, 2, 3, 1},    {6, 10, 7, 15},  {11, 13, 17, 53},
    {23, 29, 31, 194}, {12, 18, 35, 181}, {9, 14, 25, 58}, {4, 6, 9, 11},
};

}  // namespace

TEST_CASE("oracle against sieve values") {
  for (const auto& k : kKnown) {
    CAPTURE(k.a);
    CAPTURE(k.b);
    CAPTURE(k.c);
    CHECK(oracle_g(GeneratorSet({k.a, k.b, k.c})) == k.g);
  }
  CHECK(oracle_g(GeneratorSet({1, 5})) == -1);
  CHECK(oracle_g(GeneratorSet({3, 5})) == 7);
  CHECK_THROWS_AS(oracle_g(GeneratorSet({2, 4, 6})), InfiniteGapsError);
  CHECK_THROWS(GeneratorSet({}));
  CHECK_THROWS(GeneratorSet({3, 0}));
}

TEST_CASE("duplicates count toward the sum but not the gaps") {
  const auto r = oracle_frobenius(GeneratorSet({3, 5, 5}));
  CHECK(r.g == 7);
  CHECK(r.f == 20);
  CHECK(r.deduplicated);
}

TEST_CASE("multiplier and rho") {
  CHECK(find_multiplier(5, 6, 7) == 2);
  CHECK(find_multiplier(7, 2, 3) == 5);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS(mod_inverse(2, 4));
  CHECK(rho_eval(5, 2, Rational(6), Rational(7)) == Rational(27));
  CHECK(rho_eval(2, 1, Rational(1), Rational(1)) == Rational(3));
  const RodsethTables t(5, 2);
  CHECK(rho_eval(t, 6, 7) == 27);
}

TEST_CASE("rho is homogeneous of degree one") {
  const RodsethTables t(11, 4);
  for (std::int64_t t1 = 1; t1 <= 6; ++t1) {
    for (std::int64_t t2 = 1; t2 <= 6; ++t2) {
      CHECK(rho_eval(t, Rational(t1), Rational(t2)) == Rational(t1) * rho_eval(t, Rational(1), Rational(t2, t1)));
    }
  }
}

TEST_CASE("f_three examples") {
  const auto r = f_three(6, 10, 7);
  CHECK(r.f == 38);
  CHECK(r.g == 15);
  CHECK(r.reduction_factor == 2);
  CHECK(r.method == Method::rodseth);
  CHECK(f_three(3, 5, 7).g == 4);
  CHECK(f_three(1, 5, 7).f == 12);
  CHECK_THROWS_AS(f_three(2, 4, 6), InfiniteGapsError);
}

TEST_CASE("f_three agrees with the oracle and is symmetric") {
  for (std::int64_t a = 1; a <= 24; ++a) {
    for (std::int64_t b = 1; b <= 24; ++b) {
      for (std::int64_t c = 1; c <= 24; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        const auto f = f_three(a, b, c).f;
        CHECK(f == oracle_frobenius(GeneratorSet({a, b, c})).f);
        CHECK(f == f_three(c, a, b).f);
        CHECK(f == f_three(b, c, a).f);
      }
    }
  }
}

TEST_CASE("fixed modulus evaluator matches f_three") {
  for (std::int64_t a : {1, 2, 6, 12, 17, 30}) {
    FixedModulusEvaluator ev(a);
    for (std::int64_t b = 1; b <= 40; ++b) {
      for (std::int64_t c = 1; c <= 40; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        CHECK(ev.f(b, c) == f_three(a, b, c).f);
      }
    }
  }
}
