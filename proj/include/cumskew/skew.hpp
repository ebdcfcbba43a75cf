#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "cumskew/error.hpp"
#include "cumskew/lorenz.hpp"
#include "cumskew/sample.hpp"
#include "cumskew/summation.hpp"

namespace cumskew {

struct SkewReport {
  std::size_t n = 0;
  double cs = 0.0;
  double b1 = 0.0;
  double gini = 0.0;
  bool degenerate = false;

  // Attainable bound on |cs| for this n.
  double cs_bound() const noexcept {
    return 1.0 - 2.0 / static_cast<double>(n);
  }
};

namespace detail {

// CS of an ascending-sorted range. `gaps` is scratch storage.
inline double cumulative_skew_sorted(std::span<const double> sorted,
                                     std::vector<double>& gaps) {
  if (sorted.front() == sorted.back()) return 0.0;
  canonical_gaps(sorted, gaps);

  const std::size_t n = sorted.size();
  const double dn = static_cast<double>(n);
  CompensatedSum weighted;
  CompensatedSum plain;
  for (std::size_t i = 1; i < n; ++i) {
    const double w = (2.0 * static_cast<double>(i) - dn) * 3.0 / dn;
    weighted.add(gaps[i - 1] * w);
    plain.add(gaps[i - 1]);
  }
  const double denom = plain.value();
  if (denom <= 0.0) return 0.0;
  return weighted.value() / denom;
}

// Population moment skewness m3 / m2^1.5; caller guarantees non-constant.
inline double moment_skewness_unchecked(std::span<const double> values) {
  const double mean = compensated_mean(values);
  CompensatedSum s2;
  CompensatedSum s3;
  for (double v : values) {
    const double y = v - mean;
    const double y2 = y * y;
    s2.add(y2);
    s3.add(y2 * y);
  }
  const double dn = static_cast<double>(values.size());
  const double m2 = s2.value() / dn;
  const double m3 = s3.value() / dn;
  return m3 / (m2 * std::sqrt(m2));
}

}  // namespace detail

// Cumulative skew: sum(d_i * w_i) / sum(d_i) over the Lorenz gaps of the
// canonical shift. Constant samples give 0.
inline double cumulative_skew(const Sample& s) {
  const std::vector<double> sorted = s.sorted();
  std::vector<double> gaps;
  return detail::cumulative_skew_sorted(sorted, gaps);
}

// Classical (population-form) moment coefficient of skewness.
inline double moment_skewness(const Sample& s) {
  if (s.is_constant()) {
    throw Error(ErrorCode::ConstantSample,
                "moment skewness is undefined for a constant sample");
  }
  return detail::moment_skewness_unchecked(s.values());
}

// Twice the area between the diagonal and the Lorenz curve, (2/n) * sum d_i.
// Lies in [0, 1) for nonnegative data. Samples with negative values are
// measured on the canonical shift, so there (unlike CS) it depends on
// location.
inline double gini(const LorenzGrid& g) {
  const double area = compensated_sum(g.d);
  return 2.0 * area / static_cast<double>(g.n);
}

inline SkewReport skew_report(const Sample& s) {
  SkewReport r;
  r.n = s.size();
  r.degenerate = s.is_constant();
  if (r.degenerate) return r;
  r.cs = cumulative_skew(s);
  r.b1 = detail::moment_skewness_unchecked(s.values());
  r.gini = gini(lorenz_grid(s));
  return r;
}

}  // namespace cumskew
