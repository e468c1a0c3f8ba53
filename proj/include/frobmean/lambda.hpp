#pragma once

#include <cstdint>
#include <vector>

#include "frobmean/rational.hpp"

namespace frobmean {

/*
 * How the band condition  w/x <= alpha < w/(x - z)  reads on the diagonal
 * x = z, where the upper bound has a zero denominator.
 *
 *   unbounded         w/0 is +inf, so only w/x <= alpha is required.
 *   cross_multiplied  alpha (x - z) < w, so the diagonal needs w > 0.
 *
 * The two differ only on solutions with x = z and w = 0.
 */
enum class DiagonalRule { unbounded, cross_multiplied };

inline constexpr DiagonalRule kDefaultDiagonalRule = DiagonalRule::unbounded;

/// Sum of (y + w + alpha z) over x y + w z = a inside the alpha band.
Rational lambda_direct(std::int64_t a, const Rational& alpha, DiagonalRule rule = kDefaultDiagonalRule);

/*
 * lambda(a, alpha) for every a <= R at once, accumulated from lattice points
 * (n, k, Q', Q) = (x, z, y, w). Each entry is kept as base + alpha * z_weight
 * with integer parts, so the value is exact for any alpha.
 */
class LambdaTable {
 public:
  LambdaTable(std::int64_t R, const Rational& alpha, DiagonalRule rule = kDefaultDiagonalRule,
              unsigned workers = 1);

  std::int64_t R() const { return R_; }
  const Rational& alpha() const { return alpha_; }
  /// Sum of (y + w) for a.
  std::int64_t base(std::int64_t a) const { return base_[a]; }
  /// Sum of z for a.
  std::int64_t z_weight(std::int64_t a) const { return z_weight_[a]; }
  Rational value(std::int64_t a) const;

 private:
  std::int64_t R_;
  Rational alpha_;
  std::vector<std::int64_t> base_;
  std::vector<std::int64_t> z_weight_;
};

enum class LambdaStarMethod { mobius, direct };

/// Which coprimality conditions the starred z and w sums carry in the direct definition.
enum class StarCoprimality {
  z_with_x_w_with_y,  ///< (z, x) = 1 and (w, y) = 1; agrees with the Möbius route.
  z_with_x_w_with_x,
  z_with_a_w_with_a,
};

Rational lambda_star(std::int64_t a, const Rational& alpha, LambdaStarMethod method = LambdaStarMethod::mobius,
                     DiagonalRule rule = kDefaultDiagonalRule);
Rational lambda_star_direct(std::int64_t a, const Rational& alpha, StarCoprimality coprimality,
                            DiagonalRule rule = kDefaultDiagonalRule);

/// Sum of rho_{l,a}(1, alpha) over l in [1, a] coprime to a. For a = 1 this is 1 + alpha.
Rational rho_star(std::int64_t a, const Rational& alpha);
Rational rho_star(std::int64_t a, const Rational& t1, const Rational& t2);

struct Quadruple {
  std::int64_t u1 = 0, u2 = 0, v1 = 0, v2 = 0;
  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

/// Solutions of u1 u2 - v1 v2 = a with 0 <= v_i < u_i <= a and (u_i, v_i) = 1, sorted.
std::vector<Quadruple> brute_force_quadruples(std::int64_t a);
/// (q_n, s_{n-1}, q_{n-1}, s_n) over all coprime l and 0 <= n <= m(l), sorted.
std::vector<Quadruple> convergent_quadruples(std::int64_t a);

struct BijectionReport {
  bool equal = false;
  std::size_t brute_count = 0;
  std::size_t convergent_count = 0;
};

BijectionReport quadruple_bijection_check(std::int64_t a);

struct LatticeTuple {
  std::int64_t n = 0, k = 0, qp = 0, q = 0;
};

/// n Q' + k Q <= R,  alpha (n - k) < Q <= alpha n,  1 <= k <= n,  Q' >= 1,  Q >= 0.
bool in_base_region(const LatticeTuple& t, std::int64_t R, const Rational& alpha);

/// How the outer Q' window of the fifth case is read.
enum class FifthCaseReading {
  q_prime,    ///< U2 (U2 - Q)/(U2 + Q) < Q' <= U2 - Q
  literal_q,  ///< the condition applied to Q, as typeset
};

/*
 * Signed number of the five case regions containing t (the fourth case is
 * the inclusion-exclusion +Omega41 +Omega42 -Omega43). Every comparison
 * against U1 = sqrt(R/alpha) or U2 = sqrt(R alpha) is exact.
 */
int region_signed_membership(const LatticeTuple& t, std::int64_t R, const Rational& alpha,
                             FifthCaseReading reading = FifthCaseReading::q_prime);

struct PartitionReport {
  std::int64_t scanned = 0;
  std::int64_t in_region = 0;
  std::int64_t mismatches = 0;
  bool ok() const { return mismatches == 0; }
};

/// Compares membership with the base-region indicator for every tuple with n Q' + k Q <= 2R.
PartitionReport partition_scan(std::int64_t R, const Rational& alpha, unsigned workers = 1,
                               FifthCaseReading reading = FifthCaseReading::q_prime);

struct LambdaMeanReport {
  Rational lhs;
  double main = 0.0;
  double rel_err = 0.0;
};

/// delta * sum_{a <= R, delta | a} lambda(a, alpha) against (4 pi/15) R^{5/2} sqrt(alpha) sum_{tau | delta} phi(tau)/tau^2.
LambdaMeanReport lambda_mean_check(std::int64_t R, std::int64_t delta, const Rational& alpha,
                                   DiagonalRule rule = kDefaultDiagonalRule, unsigned workers = 1);

struct SigmaWeightedReport {
  double lhs = 0.0;
  double main = 0.0;
  double rel_err = 0.0;
};

/// sum_{a <= R, delta | a} sigma_{-1}(a) a^{3/2} against (pi^2/15)(R^{5/2}/delta) sum_{tau | delta} phi(tau)/tau^2.
SigmaWeightedReport sigma_weighted_check(std::int64_t R, std::int64_t delta);

}  // namespace frobmean
