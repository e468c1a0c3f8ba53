#include "frobmean/contfrac.hpp"

#include <numeric>
#include <stdexcept>

namespace frobmean {

std::int64_t CfExpansion::digit_sum() const {
  return std::accumulate(digits.begin(), digits.end(), std::int64_t{0});
}

Rational CfExpansion::value() const {
  if (digits.empty()) return Rational(0);
  Rational x(digits.back());
  for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) x = Rational(*it) + x.inverse();
  return x.inverse();
}

CfExpansion rcf_expand(const Rational& r) {
  if (r <= Rational(0) || r >= Rational(1)) {
    throw std::invalid_argument("rcf_expand needs 0 < r < 1, got " + r.str());
  }
  // Euclid on (den, num); the last quotient is >= 2 automatically since the
  // final remainder step divides by a value > 1.
  CfExpansion out;
  std::int64_t p = r.den();
  std::int64_t q = r.num();
  while (q != 0) {
    out.digits.push_back(p / q);
    const std::int64_t t = p % q;
    p = q;
    q = t;
  }
  return out;
}

std::int64_t s1(const Rational& r) { return rcf_expand(r).digit_sum(); }

std::vector<std::int64_t> ncf_expand(std::int64_t a, std::int64_t l) {
  if (a < 2 || l < 1 || l >= a) {
    throw std::invalid_argument("ncf_expand needs a >= 2 and 1 <= l < a");
  }
  if (std::gcd(a, l) != 1) throw std::invalid_argument("ncf_expand needs gcd(a, l) = 1");
  std::vector<std::int64_t> digits;
  while (l != 0) {
    const std::int64_t c = (a + l - 1) / l;
    digits.push_back(c);
    const std::int64_t next = c * l - a;
    a = l;
    l = next;
  }
  return digits;
}

Rational ncf_value(std::span<const std::int64_t> digits) {
  if (digits.empty()) throw std::invalid_argument("empty digit list");
  Rational x(digits.back());
  for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) x = Rational(*it) - x.inverse();
  return x;
}

RodsethTables::RodsethTables(std::int64_t a, std::int64_t l)
    : a_(a), l_(l), digits_(ncf_expand(a, l)) {
  const int m = this->m();
  q_.assign(static_cast<std::size_t>(m) + 2, 0);
  s_.assign(static_cast<std::size_t>(m) + 2, 0);
  q_[0] = 0;
  q_[1] = 1;
  for (int j = 0; j < m; ++j) {
    q_[j + 2] = digits_[j] * q_[j + 1] - q_[j];
  }
  s_[m + 1] = 0;
  s_[m] = 1;
  for (int j = m - 1; j >= 0; --j) {
    s_[j] = digits_[j] * s_[j + 1] - s_[j + 2];
  }
}

template <typename Le>
int RodsethTables::first_at_or_below(Le le) const {
  // Smallest n in [0, m] with s_n/q_n <= t2/t1; the chain is strictly
  // decreasing and ends at 0, so the predicate is monotone and true at m.
  int lo = 0;
  int hi = m();
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (le(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

int RodsethTables::band(std::int64_t t1, std::int64_t t2) const {
  if (t1 <= 0 || t2 < 0) throw std::invalid_argument("band needs t1 > 0 and t2 >= 0");
  return first_at_or_below([&](int n) {
    return static_cast<i128>(s(n)) * t1 <= static_cast<i128>(t2) * q(n);
  });
}

int RodsethTables::band(const Rational& t1, const Rational& t2) const {
  if (t1.sign() <= 0 || t2.sign() < 0) throw std::invalid_argument("band needs t1 > 0 and t2 >= 0");
  // s_n t1 <= t2 q_n  <=>  s_n * t1.num * t2.den <= t2.num * t1.den * q_n
  const i128 lhs_scale = static_cast<i128>(t1.num()) * t2.den();
  const i128 rhs_scale = static_cast<i128>(t2.num()) * t1.den();
  return first_at_or_below([&](int n) {
    const i128 lhs = lhs_scale * s(n);
    const i128 rhs = rhs_scale * q(n);
    if ((lhs_scale != 0 && lhs / lhs_scale != s(n)) || (rhs_scale != 0 && rhs / rhs_scale != q(n))) {
      throw OverflowError("band comparison overflow");
    }
    return lhs <= rhs;
  });
}

RodsethTables rodseth_tables(std::int64_t a, std::int64_t l) { return RodsethTables(a, l); }

}  // namespace frobmean
