#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frobmean/rational.hpp"

namespace frobmean {

/// Canonical regular expansion r = [0; a_1, ..., a_s] of 0 < r < 1, with a_s >= 2.
struct CfExpansion {
  std::vector<std::int64_t> digits;

  std::size_t size() const { return digits.size(); }
  /// Sum of partial quotients.
  std::int64_t digit_sum() const;
  /// Evaluates [0; a_1, ..., a_s] exactly.
  Rational value() const;
};

CfExpansion rcf_expand(const Rational& r);

/// Sum of the partial quotients of r in (0, 1).
std::int64_t s1(const Rational& r);

/// Negative (reduced regular) expansion a/l = a_1 - 1/(a_2 - ... - 1/a_m), all digits >= 2.
std::vector<std::int64_t> ncf_expand(std::int64_t a, std::int64_t l);

/// Evaluates a negative continued fraction digit list exactly.
Rational ncf_value(std::span<const std::int64_t> digits);

/*
 * Convergent tables of a/l used by Rödseth's formula.
 *
 *   q_{-1} = 0, q_0 = 1,     q_{j+1} = a_{j+1} q_j - q_{j-1}
 *   s_m = 0,    s_{m-1} = 1, s_{j-1} = a_{j+1} s_j - s_{j+1}
 *
 * so that q_m = s_{-1} = a and s_j/q_j strictly decreases from +inf to 0.
 */
class RodsethTables {
 public:
  RodsethTables(std::int64_t a, std::int64_t l);

  std::int64_t a() const { return a_; }
  std::int64_t l() const { return l_; }
  /// Number of NCF digits.
  int m() const { return static_cast<int>(digits_.size()); }
  std::span<const std::int64_t> digits() const { return digits_; }

  /// j in [-1, m].
  std::int64_t q(int j) const { return q_[static_cast<std::size_t>(j + 1)]; }
  std::int64_t s(int j) const { return s_[static_cast<std::size_t>(j + 1)]; }

  /// The unique n in [0, m] with s_n/q_n <= t2/t1 < s_{n-1}/q_{n-1}, for t1 > 0, t2 >= 0.
  int band(std::int64_t t1, std::int64_t t2) const;
  int band(const Rational& t1, const Rational& t2) const;

 private:
  template <typename Le>
  int first_at_or_below(Le le) const;

  std::int64_t a_;
  std::int64_t l_;
  std::vector<std::int64_t> digits_;
  std::vector<std::int64_t> q_;
  std::vector<std::int64_t> s_;
};

RodsethTables rodseth_tables(std::int64_t a, std::int64_t l);

}  // namespace frobmean
