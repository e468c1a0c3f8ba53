#pragma once

#include <cmath>

namespace frobmean {

/// Neumaier's compensated summation; merges re-run the compensation.
template <typename T>
class BasicCompensatedSum {
 public:
  BasicCompensatedSum() = default;
  explicit BasicCompensatedSum(T init) : sum_(init) {}

  BasicCompensatedSum& operator+=(const T& x) {
    using std::abs;
    const T t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  BasicCompensatedSum& operator-=(const T& x) { return *this += T(-x); }

  BasicCompensatedSum& operator+=(const BasicCompensatedSum& o) {
    *this += o.sum_;
    *this += o.comp_;
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_{0};
  T comp_{0};
};

using CompensatedSum = BasicCompensatedSum<double>;

}  // namespace frobmean
