#include "frobmean/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace frobmean {

QuadraticSurd::QuadraticSurd(Rational rational, Rational irrational, std::int64_t radicand)
    : a_(rational), b_(irrational), d_(radicand) {
  if (radicand < 1) throw std::invalid_argument("radicand must be positive");
  // A square radicand makes the field degenerate; fold the root into the rational part.
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(radicand)));
  while (root * root > radicand) --root;
  while ((root + 1) * (root + 1) <= radicand) ++root;
  if (root * root == radicand && b_.sign() != 0) {
    a_ += b_ * Rational(root);
    b_ = 0;
  }
}

void QuadraticSurd::check_same_field(const QuadraticSurd& o) const {
  if (d_ != o.d_) throw std::invalid_argument("surds over different radicands");
}

int QuadraticSurd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: |a| vs |b| sqrt(D).
  const Rational diff = a_ * a_ - b_ * b_ * Rational(d_);
  if (diff.sign() > 0) return sa;
  if (diff.sign() < 0) return sb;
  return 0;
}

double QuadraticSurd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadraticSurd::str() const {
  return a_.str() + " + (" + b_.str() + ")*sqrt(" + std::to_string(d_) + ")";
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  x.check_same_field(y);
  return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  x.check_same_field(y);
  return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  x.check_same_field(y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.d_), x.a_ * y.b_ + x.b_ * y.a_, x.d_};
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
  x.check_same_field(y);
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.d_);
  if (norm.sign() == 0) throw std::domain_error("division by a zero-norm surd");
  return x * QuadraticSurd(y.a_ / norm, -y.b_ / norm, y.d_);
}

}  // namespace frobmean
