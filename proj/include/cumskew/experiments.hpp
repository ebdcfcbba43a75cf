#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cumskew/distributions.hpp"
#include "cumskew/error.hpp"
#include "cumskew/random.hpp"
#include "cumskew/skew.hpp"
#include "cumskew/summation.hpp"

namespace cumskew {

struct Aggregate {
  double mean = 0.0;
  double se = 0.0;
};

// Mean and standard error (sd with n-1 denominator over sqrt(n)); se = 0 for
// a single value. Accumulates in input order.
inline Aggregate aggregate(std::span<const double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::EmptyOrTooSmall, "aggregate needs at least 1 value");
  }
  Aggregate out;
  out.mean = compensated_mean(values);
  if (values.size() == 1) return out;
  CompensatedSum ss;
  for (double v : values) {
    const double y = v - out.mean;
    ss.add(y * y);
  }
  const double count = static_cast<double>(values.size());
  out.se = std::sqrt(ss.value() / (count - 1.0)) / std::sqrt(count);
  return out;
}

struct ConditionSpec {
  std::string id;
  DistributionSpec distribution;
  std::optional<ContaminationSpec> contamination;
  // When greater than contamination->count, each replication draws its
  // outlier count uniformly from [contamination->count, contamination_max].
  std::size_t contamination_max = 0;
  std::size_t n = 200;
  std::size_t reps = 10000;

  void validate() const {
    if (id.empty()) throw Error(ErrorCode::InvalidParameter, "empty condition id");
    if (n < 2) throw Error(ErrorCode::EmptyOrTooSmall, "condition n must be >= 2");
    if (reps < 1) throw Error(ErrorCode::InvalidParameter, "reps must be >= 1");
    distribution.validate();
    if (contamination) {
      contamination->validate();
      const std::size_t top = std::max(contamination->count, contamination_max);
      if (top > n / 2) {
        throw Error(ErrorCode::CountTooLarge,
                    "contamination count exceeds n/2 for condition " + id);
      }
    }
  }
};

struct ConditionResult {
  std::string id;
  DistributionSpec distribution;
  std::string contamination = "none";
  std::size_t n = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  double b1_ave = 0.0;
  double b1_se = 0.0;
  double cs_ave = 0.0;
  double cs_se = 0.0;
  // Constant replications: CS counted as 0, excluded from the b1 average.
  std::size_t degenerate_count = 0;
};

struct GCurvePoint {
  double g = 0.0;
  double sd = 0.0;
  double cs = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

struct RunOptions {
  // Worker threads; 0 selects std::thread::hardware_concurrency().
  unsigned threads = 1;
};

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Calls body(i) for i in [0, count) on up to `threads` workers. Each index is
// handled exactly once; the first exception is rethrown on the caller.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= count) return;
        const std::size_t end = std::min(count, begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) body(i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

constexpr std::uint64_t sibling_stream_id(std::uint64_t stream_id) noexcept {
  return mix64(stream_id ^ 0x636F6E74616D696EULL);
}

inline std::string contamination_label(const ConditionSpec& spec) {
  if (!spec.contamination) return "none";
  const auto& c = *spec.contamination;
  const std::size_t top = std::max(c.count, spec.contamination_max);
  std::string label = to_string(c.side);
  label += ':';
  label += std::to_string(c.count);
  if (top != c.count) label += ".." + std::to_string(top);
  return label;
}

}  // namespace detail

// Monte Carlo estimate of mean CS and b1 for one condition. Replication r
// draws from stream (base_seed, replication_stream_id(id, r)); contamination
// uses a sibling stream. Output is independent of the thread count.
inline ConditionResult run_condition(const ConditionSpec& spec,
                                     std::uint64_t base_seed,
                                     RunOptions options = {}) {
  spec.validate();
  std::vector<double> cs(spec.reps);
  std::vector<double> b1(spec.reps);
  std::vector<unsigned char> degenerate(spec.reps, 0);

  detail::parallel_for(spec.reps, options.threads, [&](std::size_t r) {
    const std::uint64_t sid = replication_stream_id(spec.id, r);
    RngStream rng(base_seed, sid);
    std::vector<double> values;
    spec.distribution.fill(rng, values, spec.n);
    if (spec.contamination) {
      RngStream side(base_seed, detail::sibling_stream_id(sid));
      ContaminationSpec c = *spec.contamination;
      if (spec.contamination_max > c.count) {
        c.count += side.uniform_index(spec.contamination_max - c.count + 1);
      }
      values = contaminate_values(std::move(values), c, side);
    }
    const Sample s = Sample::validate(std::move(values));
    if (s.is_constant()) {
      degenerate[r] = 1;
      cs[r] = 0.0;
      return;
    }
    std::vector<double> sorted = s.sorted();
    std::vector<double> gaps;
    cs[r] = detail::cumulative_skew_sorted(sorted, gaps);
    b1[r] = detail::moment_skewness_unchecked(s.values());
  });

  ConditionResult out;
  out.id = spec.id;
  out.distribution = spec.distribution;
  out.contamination = detail::contamination_label(spec);
  out.n = spec.n;
  out.reps = spec.reps;
  out.seed = base_seed;

  const Aggregate cs_agg = aggregate(cs);
  out.cs_ave = cs_agg.mean;
  out.cs_se = cs_agg.se;

  std::vector<double> b1_valid;
  b1_valid.reserve(spec.reps);
  for (std::size_t r = 0; r < spec.reps; ++r) {
    if (degenerate[r]) {
      ++out.degenerate_count;
    } else {
      b1_valid.push_back(b1[r]);
    }
  }
  if (b1_valid.empty()) {
    out.b1_ave = 0.0;
    out.b1_se = 0.0;
  } else {
    const Aggregate b1_agg = aggregate(b1_valid);
    out.b1_ave = b1_agg.mean;
    out.b1_se = b1_agg.se;
  }
  return out;
}

inline constexpr std::size_t kTable1N = 200;
inline constexpr std::size_t kTable1Reps = 10000;

// The six lognormal conditions: sigma in {0.2, 0.5, 1, 2} clean, then
// sigma = 0.5 with 1..5 high outliers and sigma = 1 with 1..5 low outliers.
inline std::vector<ConditionSpec> table1_conditions(std::size_t n = kTable1N,
                                                    std::size_t reps = kTable1Reps) {
  std::vector<ConditionSpec> out;
  const double sigmas[] = {0.2, 0.5, 1.0, 2.0};
  for (int i = 0; i < 4; ++i) {
    ConditionSpec c;
    c.id = "c" + std::to_string(i + 1);
    c.distribution = DistributionSpec::lognormal(sigmas[i]);
    c.n = n;
    c.reps = reps;
    out.push_back(c);
  }
  ConditionSpec high;
  high.id = "c5";
  high.distribution = DistributionSpec::lognormal(0.5);
  high.contamination = ContaminationSpec::high(1);
  high.contamination_max = 5;
  high.n = n;
  high.reps = reps;
  out.push_back(high);

  ConditionSpec low = high;
  low.id = "c6";
  low.distribution = DistributionSpec::lognormal(1.0);
  low.contamination = ContaminationSpec::low(1);
  out.push_back(low);
  return out;
}

inline std::vector<ConditionResult> run_conditions(
    const std::vector<ConditionSpec>& specs, std::uint64_t base_seed,
    RunOptions options = {}) {
  std::vector<ConditionResult> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) out.push_back(run_condition(spec, base_seed, options));
  return out;
}

inline std::vector<ConditionResult> run_table1(std::uint64_t base_seed,
                                               RunOptions options = {}) {
  return run_conditions(table1_conditions(), base_seed, options);
}

// Null study for a symmetric distribution (normal or Cauchy).
inline ConditionResult run_null(const DistributionSpec& dist, std::size_t n,
                                std::size_t reps, std::uint64_t base_seed,
                                RunOptions options = {}) {
  if (dist.kind != DistributionKind::Normal &&
      dist.kind != DistributionKind::Cauchy) {
    throw Error(ErrorCode::InvalidParameter,
                "null experiments need a symmetric distribution");
  }
  ConditionSpec spec;
  spec.id = std::string("null-") + to_string(dist.kind);
  spec.distribution = dist;
  spec.n = n;
  spec.reps = reps;
  return run_condition(spec, base_seed, options);
}

inline std::vector<double> default_g_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 15; ++k) grid.push_back(k / 10.0);
  return grid;
}

inline constexpr std::size_t kGCurveN = 100000;

// CS of Tukey g samples along `g_grid`, one curve per underlying SD. Each
// curve reuses a single underlying normal sample (mean 0), so points on a
// curve differ only through g.
inline std::vector<GCurvePoint> run_gcurve(std::span<const double> g_grid,
                                           std::span<const double> sds,
                                           std::size_t n,
                                           std::uint64_t base_seed,
                                           RunOptions options = {}) {
  if (n < 2) throw Error(ErrorCode::EmptyOrTooSmall, "gcurve n must be >= 2");
  if (!std::is_sorted(g_grid.begin(), g_grid.end())) {
    throw Error(ErrorCode::InvalidParameter, "g grid must be ascending");
  }
  for (double g : g_grid) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
      throw Error(ErrorCode::InvalidParameter, "g values must be finite and >= 0");
    }
  }
  for (double sd : sds) {
    if (!(sd > 0.0) || !std::isfinite(sd)) {
      throw Error(ErrorCode::InvalidParameter, "SD values must be finite and > 0");
    }
  }

  std::vector<GCurvePoint> out(g_grid.size() * sds.size());
  for (std::size_t k = 0; k < sds.size(); ++k) {
    RngStream rng(base_seed, replication_stream_id("gcurve", k));
    std::vector<double> z(n);
    for (auto& v : z) v = sds[k] * rng.standard_normal();
    std::sort(z.begin(), z.end());

    detail::parallel_for(g_grid.size(), options.threads, [&](std::size_t j) {
      // The transform is increasing, so sorted z stays sorted.
      std::vector<double> t(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) t[i] = tukey_g_transform(z[i], g_grid[j]);
      std::vector<double> gaps;
      GCurvePoint& p = out[k * g_grid.size() + j];
      p.g = g_grid[j];
      p.sd = sds[k];
      p.n = n;
      p.seed = base_seed;
      p.cs = detail::cumulative_skew_sorted(t, gaps);
    });
  }
  return out;
}

}  // namespace cumskew
