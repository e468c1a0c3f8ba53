#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "frobmean/rational.hpp"

namespace frobmean {

/*
 * Element a + b*sqrt(D) of the field Q(sqrt D), D > 0 fixed per value.
 * Signs and comparisons are exact: when a and b disagree in sign the
 * result is decided by a^2 versus b^2 D.
 */
class QuadraticSurd {
 public:
  QuadraticSurd(Rational rational, Rational irrational, std::int64_t radicand);
  /// Embeds a rational into Q(sqrt D).
  QuadraticSurd(const Rational& rational, std::int64_t radicand) : QuadraticSurd(rational, 0, radicand) {}

  /// sqrt(D) itself, scaled by `scale`.
  static QuadraticSurd root(std::int64_t radicand, const Rational& scale = 1) {
    return QuadraticSurd(0, scale, radicand);
  }

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  std::int64_t radicand() const { return d_; }

  int sign() const;
  double to_double() const;
  std::string str() const;

  QuadraticSurd operator-() const { return {-a_, -b_, d_}; }
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);

  friend QuadraticSurd operator+(const QuadraticSurd& x, const Rational& y) { return {x.a_ + y, x.b_, x.d_}; }
  friend QuadraticSurd operator+(const Rational& y, const QuadraticSurd& x) { return x + y; }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const Rational& y) { return {x.a_ - y, x.b_, x.d_}; }
  friend QuadraticSurd operator-(const Rational& y, const QuadraticSurd& x) { return {y - x.a_, -x.b_, x.d_}; }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const Rational& y) { return {x.a_ * y, x.b_ * y, x.d_}; }
  friend QuadraticSurd operator*(const Rational& y, const QuadraticSurd& x) { return x * y; }
  friend QuadraticSurd operator/(const QuadraticSurd& x, const Rational& y) { return {x.a_ / y, x.b_ / y, x.d_}; }
  friend QuadraticSurd operator/(const Rational& y, const QuadraticSurd& x) { return QuadraticSurd(y, x.d_) / x; }

  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return (x <=> y) == 0; }

  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const Rational& y) {
    return x <=> QuadraticSurd(y, x.d_);
  }
  friend bool operator==(const QuadraticSurd& x, const Rational& y) { return (x <=> y) == 0; }

 private:
  void check_same_field(const QuadraticSurd& o) const;

  Rational a_;
  Rational b_;
  std::int64_t d_;
};

}  // namespace frobmean
