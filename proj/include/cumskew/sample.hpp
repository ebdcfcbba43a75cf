#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cumskew/error.hpp"

namespace cumskew {

// A validated, immutable set of observations: at least two values, all
// finite. Input order is preserved.
class Sample {
 public:
  static Sample validate(std::vector<double> raw) {
    if (raw.size() < 2) {
      throw Error(ErrorCode::EmptyOrTooSmall,
                  "a sample needs at least 2 values, got " +
                      std::to_string(raw.size()));
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (!std::isfinite(raw[i])) {
        throw Error(ErrorCode::NonFiniteValue,
                    "non-finite value at index " + std::to_string(i), i);
      }
    }
    return Sample(std::move(raw));
  }

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  // True when every observation is identical.
  bool is_constant() const noexcept {
    const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
    return *lo == *hi;
  }

  std::vector<double> sorted() const {
    std::vector<double> out = values_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  explicit Sample(std::vector<double> v) : values_(std::move(v)) {}

  std::vector<double> values_;
};

inline Sample validate_sample(std::vector<double> raw) {
  return Sample::validate(std::move(raw));
}

inline Sample validate_sample(std::span<const double> raw) {
  return Sample::validate(std::vector<double>(raw.begin(), raw.end()));
}

}  // namespace cumskew
