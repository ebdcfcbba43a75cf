#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "cumskew/error.hpp"
#include "cumskew/sample.hpp"
#include "cumskew/summation.hpp"

namespace cumskew {

// Which values the Lorenz curve is drawn from.
enum class LorenzBase {
  Raw,        // the observations themselves (all >= 0, positive total)
  Canonical,  // x - mean + 1, so the total is n
};

// Interior points i = 1..n-1 of the Lorenz curve of a sample.
//
//   p[i-1] = i/n                     cumulative share of individuals
//   q[i-1] = S_i / S_n               cumulative share of total size
//   d[i-1] = p[i-1] - q[i-1] >= 0    gap to the 45-degree line
//
// Nonnegative data with a positive total use the raw values, which gives the
// conventional curve and Gini. Anything else (negative values, zero total)
// uses the canonical mean-1 shift, under which the curve is always defined.
// CS is identical under both; the gaps differ only by a common factor.
struct LorenzGrid {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> d;
  std::size_t n = 0;
  double total = 0.0;
  LorenzBase base = LorenzBase::Raw;
};

// Rank-linear gap weights w_i = (2i - n) * 3 / n, i = 1..n-1.
struct WeightVector {
  std::vector<double> w;
  std::size_t n = 0;
};

inline WeightVector weight_vector(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::EmptyOrTooSmall,
                "weights need n >= 2, got " + std::to_string(n));
  }
  WeightVector out;
  out.n = n;
  out.w.resize(n - 1);
  const double dn = static_cast<double>(n);
  for (std::size_t i = 1; i < n; ++i) {
    const double k = 2.0 * static_cast<double>(i) - dn;
    out.w[i - 1] = k * 3.0 / dn;
  }
  return out;
}

namespace detail {

// Gaps of an ascending-sorted range. The curve is taken over y + offset,
// where y = x - mean; offset = mean reproduces the raw data and offset = 1 the
// canonical shift.
//
// With C_i the partial sums of y, C_n the rounding-level residual of the full
// sum and T = C_n + n*offset the total,
//   d_i = (i*C_n - n*C_i) / (n*T),
// which avoids the cancellation of forming p_i - q_i directly. Negative
// rounding residue is clamped to zero.
inline double lorenz_gaps(std::span<const double> sorted, double mean,
                          double offset, std::vector<double>& gaps) {
  const std::size_t n = sorted.size();
  const double dn = static_cast<double>(n);

  gaps.resize(n - 1);
  CompensatedSum partial;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    partial.add(sorted[i] - mean);
    gaps[i] = partial.value();
  }
  partial.add(sorted[n - 1] - mean);
  const double residual = partial.value();
  const double total = residual + dn * offset;

  const double denom = dn * total;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double idx = static_cast<double>(i + 1);
    const double g = (idx * residual - dn * gaps[i]) / denom;
    gaps[i] = g > 0.0 ? g : 0.0;
  }
  return total;
}

inline double canonical_gaps(std::span<const double> sorted,
                             std::vector<double>& gaps) {
  return lorenz_gaps(sorted, compensated_mean(sorted), 1.0, gaps);
}

}  // namespace detail

inline LorenzGrid lorenz_grid(const Sample& s, bool force_canonical = false) {
  const std::vector<double> sorted = s.sorted();
  LorenzGrid grid;
  grid.n = s.size();

  const double mean = compensated_mean(sorted);
  const bool raw_ok = !force_canonical && sorted.front() >= 0.0 &&
                      sorted.back() > 0.0;
  grid.base = raw_ok ? LorenzBase::Raw : LorenzBase::Canonical;
  if (sorted.front() == sorted.back()) {
    grid.d.assign(grid.n - 1, 0.0);
    grid.total = raw_ok ? compensated_sum(sorted)
                        : static_cast<double>(grid.n);
  } else {
    grid.total = detail::lorenz_gaps(sorted, mean, raw_ok ? mean : 1.0, grid.d);
  }

  const double dn = static_cast<double>(grid.n);
  grid.p.resize(grid.n - 1);
  grid.q.resize(grid.n - 1);
  for (std::size_t i = 0; i + 1 < grid.n; ++i) {
    grid.p[i] = static_cast<double>(i + 1) / dn;
    grid.q[i] = grid.p[i] - grid.d[i];
  }
  return grid;
}

}  // namespace cumskew
