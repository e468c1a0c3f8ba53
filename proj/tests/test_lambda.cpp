#include <doctest.h>

#include <cmath>

#include "frobmean/lambda.hpp"

using namespace frobmean;

TEST_CASE("lambda small values") {
  CHECK(lambda_direct(1, Rational(3, 7)) == Rational(10, 7));
  CHECK(lambda_direct(2, Rational(1)) == Rational(9));
  CHECK(lambda_direct(1, Rational(1), DiagonalRule::cross_multiplied) == Rational(0));
  CHECK(lambda_direct(2, Rational(1), DiagonalRule::cross_multiplied) == Rational(3));
  // frozen from an independent enumeration in exact fractions
  CHECK(lambda_direct(5, Rational(2, 3)) == Rational(62, 3));
  CHECK(lambda_direct(12, Rational(3, 5)) == Rational(447, 5));
  CHECK(lambda_direct(30, Rational(7, 2)) == Rational(1410));
  CHECK(lambda_direct(17, Rational(1)) == Rational(78));
  CHECK_THROWS(lambda_direct(0, Rational(1)));
  CHECK_THROWS(lambda_direct(3, Rational(0)));
}

TEST_CASE("lattice table reproduces direct enumeration") {
  for (const auto rule : {DiagonalRule::unbounded, DiagonalRule::cross_multiplied}) {
    for (const Rational al : {Rational(3, 5), Rational(1), Rational(7, 2)}) {
      const LambdaTable table(60, al, rule, 3);
      for (std::int64_t a = 1; a <= 60; ++a) CHECK(table.value(a) == lambda_direct(a, al, rule));
    }
  }
}

TEST_CASE("starred lambda: Mobius route against direct coprimality readings") {
  const Rational grid[] = {Rational(2, 7), Rational(3, 5), Rational(5, 3), Rational(285, 997)};
  for (const auto& al : grid) {
    for (std::int64_t a = 1; a <= 60; ++a) {
      CHECK(lambda_star(a, al, LambdaStarMethod::mobius) == lambda_star(a, al, LambdaStarMethod::direct));
    }
  }
  // the other two readings of the starred sums disagree somewhere
  bool xx_differs = false, aa_differs = false;
  for (std::int64_t a = 2; a <= 30; ++a) {
    const auto m = lambda_star(a, Rational(3, 5));
    xx_differs |= m != lambda_star_direct(a, Rational(3, 5), StarCoprimality::z_with_x_w_with_x);
    aa_differs |= m != lambda_star_direct(a, Rational(3, 5), StarCoprimality::z_with_a_w_with_a);
  }
  CHECK(xx_differs);
  CHECK(aa_differs);
}

TEST_CASE("rho star splits into starred lambdas at generic alpha") {
  CHECK(rho_star(2, Rational(1)) == Rational(3));
  for (const Rational al : {Rational(285, 997), Rational(3028, 5045), Rational(1688, 1013)}) {
    for (std::int64_t a = 2; a <= 40; ++a) {
      CHECK(rho_star(a, al) == lambda_star(a, al) + al * lambda_star(a, al.inverse()));
    }
  }
  // homogeneity of the starred sum
  CHECK(rho_star(9, Rational(2), Rational(6)) == Rational(2) * rho_star(9, Rational(3)));
}

TEST_CASE("split fails at a = 1 and at tie points") {
  // rho*_1 = 1 + alpha, while both starred lambdas are 1 + alpha and 1 + 1/alpha.
  const Rational al(3, 5);
  CHECK(rho_star(1, al) == Rational(8, 5));
  CHECK(lambda_star(1, al) + al * lambda_star(1, al.inverse()) == Rational(16, 5));
  // 2/7 = w/x with w, x <= 9
  CHECK(rho_star(9, Rational(2, 7)) != lambda_star(9, Rational(2, 7)) + Rational(2, 7) * lambda_star(9, Rational(7, 2)));
}

TEST_CASE("quadruple bijection") {
  const std::vector<Quadruple> two{{1, 2, 0, 1}, {2, 1, 1, 0}};
  CHECK(brute_force_quadruples(2) == two);
  CHECK(convergent_quadruples(2) == two);
  for (std::int64_t a = 2; a <= 80; ++a) {
    const auto rep = quadruple_bijection_check(a);
    CHECK(rep.equal);
    CHECK(rep.brute_count == rep.convergent_count);
  }
  for (const auto& q : brute_force_quadruples(24)) CHECK(q.u1 * q.u2 - q.v1 * q.v2 == 24);
}

TEST_CASE("base region and signed partition") {
  CHECK_FALSE(in_base_region({3, 2, 1, 1}, 50, Rational(2, 7)));  // Q = 1 exceeds alpha n = 6/7
  CHECK(in_base_region({4, 1, 1, 1}, 50, Rational(2, 7)));
  CHECK(region_signed_membership({4, 1, 1, 5}, 50, Rational(2, 7)) == 0);
  const auto rep = partition_scan(50, Rational(2, 7), 2);
  CHECK(rep.ok());
  CHECK(rep.in_region == 693);
  CHECK(partition_scan(30, Rational(7, 2)).ok());
  CHECK(partition_scan(36, Rational(1)).ok());
}

TEST_CASE("fifth case read with Q' is needed") {
  CHECK(partition_scan(80, Rational(3, 5), 1, FifthCaseReading::q_prime).ok());
  CHECK_FALSE(partition_scan(80, Rational(3, 5), 1, FifthCaseReading::literal_q).ok());
}

TEST_CASE("mean value reports") {
  const auto one = lambda_mean_check(6, 6, Rational(1, 2));
  CHECK(one.lhs == Rational(6) * lambda_direct(6, Rational(1, 2)));
  const auto r = lambda_mean_check(200, 2, Rational(1, 2));
  CHECK(r.main == doctest::Approx(4.0 * 3.141592653589793 / 15 * std::pow(200.0, 2.5) * std::sqrt(0.5) * 1.25));
  CHECK(r.rel_err < 0.1);
  CHECK(sigma_weighted_check(1, 1).lhs == 1.0);
  CHECK(sigma_weighted_check(10000, 6).rel_err < 0.01);
}
