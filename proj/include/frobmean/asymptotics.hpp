#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frobmean/rational.hpp"

namespace frobmean {

/// Summand shapes of the closed-form sum checks over n <= R.
enum class Summand {
  power,               ///< n^p
  power_log_ratio,     ///< n^p log(R/n)
  n_frac,              ///< n (R-n)/(R+n)
  n2_frac_sq,          ///< n^2 (R-n)^2/(R+n)^2
  diff_over_sumsq,     ///< (R-n)/(n^2+R^2)
  n2_log_mix,          ///< n^2 log(1 + (R/n)(R-n)/(R+n))
  n2_diff_over_sumsq,  ///< n^2 (R-n)/(R^2+n^2)
  n3_frac,             ///< n^3 (R-n)/(R+n)
  n4_log_mix,          ///< n^4 log(1 + (R/n)(R-n)/(R+n))
  n4_diff_over_sumsq,  ///< n^4 (R-n)/(R^2+n^2)
  n2_frac,             ///< n^2 (R-n)/(R+n)
  n_frac_sq,           ///< n (R-n)^2/(R+n)^2
  n_log_shift,         ///< n log(1 + n/R)
  n2_log_shift,        ///< n^2 log(1 + n/R)
  inv_n2_log_sq,       ///< n^{-2} log(1 + n^2/R^2)
  frac_sq,             ///< (R-n)^2/(R+n)^2
  n_log_quotient,      ///< n log((R^2+n^2)/(n(R+n)))
  sum_over_sumsq,      ///< (R+n)/(n^2+R^2)
};

/// rational + log2 * log 2 + pi * pi, kept exact so the constant can be evaluated at any precision.
struct MainConstant {
  Rational rational;
  Rational log2;
  Rational pi;

  bool is_zero() const { return rational.sign() == 0 && log2.sign() == 0 && pi.sign() == 0; }
  double value() const;
};

struct AsymptoticItem {
  std::string id;  ///< "a1", "b2", "c", ... ; items a and b carry their power p
  Summand summand;
  int p = 0;
  MainConstant main_coeff;  ///< main term is main_coeff * R^main_power; zero if none
  int main_power = 0;
  int remainder_order = 0;
  bool log_factor = false;
};

/// Items (a) and (b) at p = 1, 2, 3 followed by (c) through (s).
std::span<const AsymptoticItem> asymptotic_items();
const AsymptoticItem& find_item(const std::string& id);

/// Sums are accumulated in quad precision; the remainders of some items sit
/// twenty digits below S.
struct ItemReport {
  double S = 0.0;
  double main = 0.0;
  double remainder_ratio = 0.0;
};

ItemReport item_check(const AsymptoticItem& item, std::int64_t R);

struct ConstCombination {
  double value = 0.0;
  double target = 0.0;  ///< 4 pi / 15
  double addends[5] = {};
};

ConstCombination const_combination();

/// For each b: sum over 1 <= a < b of s1(a/b), divided by b log^2 b.
std::vector<double> s1_growth_check(std::span<const std::int64_t> b_grid);

}  // namespace frobmean
