#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frobmean/meanvalue.hpp"

using namespace frobmean;

TEST_CASE("box bounds are exact floors") {
  const BoxSpec box{Rational(1, 3), Rational(1), Rational(5, 2), 10};
  CHECK(box.bound(1) == 3);
  CHECK(box.bound(2) == 10);
  CHECK(box.bound(3) == 25);
  CHECK_THROWS((BoxSpec{Rational(1, 20), Rational(1), Rational(1), 10}.bound(1)));
}

TEST_CASE("box sums") {
  const auto one = box_sums({Rational(1), Rational(1), Rational(1), 1});
  CHECK(one.F == 2);
  CHECK(one.triple_count == 1);
  CHECK(one.G == doctest::Approx(8 / std::numbers::pi));

  const auto two = box_sums({Rational(1), Rational(1), Rational(1), 2});
  CHECK(two.triple_count == 7);
  CHECK(two.F == 23);

  // frozen from a representability sieve over every coprime triple
  const auto ten = box_sums({Rational(1), Rational(1), Rational(1), 10}, 3);
  CHECK(ten.F == 20852);
  CHECK(ten.triple_count == 841);
}

TEST_CASE("Rödseth sweep matches the oracle sweep") {
  const BoxSpec box{Rational(1), Rational(1), Rational(1), 24};
  const auto fast = box_sums(box, 2);
  const auto slow = box_sums_oracle(box);
  CHECK(fast.F == slow.F);
  CHECK(fast.G == doctest::Approx(slow.G).epsilon(1e-14));
}

TEST_CASE("F is symmetric under permuting the box together with the roles") {
  const auto a = box_sums({Rational(1, 2), Rational(1), Rational(3, 2), 12});
  const auto b = box_sums({Rational(3, 2), Rational(1, 2), Rational(1), 12});
  CHECK(a.F == b.F);
  CHECK(a.triple_count == b.triple_count);
}

TEST_CASE("F does not depend on the worker count") {
  const BoxSpec box{Rational(1), Rational(1), Rational(1), 30};
  CHECK(box_sums(box, 1).F == box_sums(box, 4).F);
}

TEST_CASE("fixed a") {
  // M_2 = {(1,1), (1,2), (2,1)} with f = 3, 4, 4
  const double expect = ((3 - 8 / std::numbers::pi * std::sqrt(2.0)) + 2 * (4 - 8 / std::numbers::pi * 2.0)) /
                        (std::pow(2.0, 1.5) * 3);
  const auto r = fixed_a_error(2, Rational(1), Rational(1));
  CHECK(r.pair_count == 3);
  CHECK(r.error == doctest::Approx(expect));
  for (std::int64_t a : {2, 12, 30, 101}) {
    CHECK(fixed_a_error(a, Rational(1), Rational(3, 2), 2).pair_count ==
          fixed_a_count_mobius(a, Rational(1), Rational(3, 2)));
  }
  CHECK_THROWS(fixed_a_error(1, Rational(1), Rational(1)));
}

TEST_CASE("decay fit") {
  const std::vector<std::pair<double, double>> exact{{10, 1}, {100, 0.1}, {1000, 0.01}};
  CHECK(decay_fit(exact).slope == doctest::Approx(-1));
  const std::vector<std::pair<double, double>> flat{{10, 3}, {100, 3}};
  CHECK(decay_fit(flat).slope == doctest::Approx(0));
  const std::vector<std::pair<double, double>> zero{{10, 1}, {100, 0}};
  CHECK_THROWS_AS(decay_fit(zero), DegenerateFitError);
  const std::vector<double> mags{4, 3, 3.5, 1};
  CHECK(adjacent_inversions(mags) == 1);
}
