#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "frobmean/rational.hpp"

namespace frobmean {

/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

int mobius(std::int64_t n);
std::int64_t totient(std::int64_t n);

/*
 * Möbius and Euler totient values for 1..limit, built once by a linear
 * sieve and immutable afterwards. Queries above the limit fall back to
 * trial-division factorization.
 */
class NumTheoryTables {
 public:
  explicit NumTheoryTables(std::int64_t limit);

  std::int64_t limit() const { return limit_; }

  int mu(std::int64_t n) const;
  std::int64_t phi(std::int64_t n) const;

  /// Index 0 is unused; index n holds mu(n).
  std::span<const std::int8_t> mu_values() const { return mu_; }
  std::span<const std::int64_t> phi_values() const { return phi_; }

 private:
  std::int64_t limit_;
  std::vector<std::int8_t> mu_;
  std::vector<std::int64_t> phi_;
};

NumTheoryTables build_tables(std::int64_t limit);

/// All positive divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Exact sum of 1/d over d | n.
Rational sigma_minus1(std::int64_t n);

/// Sum over ordered pairs (d1, d2) with d1*d2 | a of mu(d1)mu(d2)/(d1 d2) * sigma_{-1}(a/(d1 d2)).
Rational heilbronn_lhs(std::int64_t a);

/// Divisibility indicator: 1 iff q | a.
int delta_div(std::int64_t q, std::int64_t a);

/// Sum over tau | delta of phi(tau)/tau^2, exactly.
Rational totient_over_square_sum(std::int64_t delta);

}  // namespace frobmean
