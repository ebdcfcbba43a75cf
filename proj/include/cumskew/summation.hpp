#pragma once

#include <cmath>
#include <span>

namespace cumskew {

// Neumaier's variant of Kahan summation. Accumulation order is the call
// order, so results are reproducible for a fixed input sequence.
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;

  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

inline double compensated_sum(std::span<const double> values) noexcept {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

inline double compensated_mean(std::span<const double> values) noexcept {
  return compensated_sum(values) / static_cast<double>(values.size());
}

}  // namespace cumskew
