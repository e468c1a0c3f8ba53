#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frobmean {

using i128 = __int128;

/// Raised when an exact value no longer fits its 64-bit storage.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

i128 gcd128(i128 a, i128 b);

/// Narrows a 128-bit intermediate, throwing OverflowError instead of wrapping.
std::int64_t narrow64(i128 v, const char* what = "int64");

std::string to_string(i128 v);

/*
 * Exact rational p/q with q > 0 and gcd(p, q) = 1.
 *
 * Storage is 64-bit; every operation is carried out on 128-bit
 * intermediates and renormalized, so a result that cannot be stored
 * raises OverflowError. Comparisons cross-multiply and never round.
 */
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  /// Parses "p/q" or "p". Anything else (including "0.5") is rejected.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }
  std::int64_t floor() const;
  std::int64_t ceil() const;
  Rational inverse() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Builds a normalized value from wide parts; throws OverflowError if it does not fit.
  static Rational from_wide(i128 n, i128 d);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace frobmean
