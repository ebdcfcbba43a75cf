#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "cumskew/error.hpp"
#include "cumskew/random.hpp"
#include "cumskew/sample.hpp"

namespace cumskew {

enum class DistributionKind { Normal, Lognormal, Cauchy, TukeyG };

inline const char* to_string(DistributionKind k) noexcept {
  switch (k) {
    case DistributionKind::Normal: return "normal";
    case DistributionKind::Lognormal: return "lognormal";
    case DistributionKind::Cauchy: return "cauchy";
    case DistributionKind::TukeyG: return "tukey_g";
  }
  return "unknown";
}

// (exp(g z) - 1) / g, continuous at g = 0. Strictly increasing in z.
inline double tukey_g_transform(double z, double g) noexcept {
  if (g == 0.0) return z;
  return std::expm1(g * z) / g;
}

// Standard Cauchy quantile tan(pi (u - 1/2)).
inline double cauchy_from_uniform(double u) noexcept {
  return std::tan(std::numbers::pi * (u - 0.5));
}

struct DistributionSpec {
  DistributionKind kind = DistributionKind::Normal;
  double mean = 0.0;   // normal mean; tukey_g underlying mean M
  double sd = 1.0;     // normal sd; lognormal shape; tukey_g underlying SD
  double g = 0.0;      // tukey_g only

  static DistributionSpec normal(double mean, double sd) {
    return {DistributionKind::Normal, mean, sd, 0.0};
  }
  static DistributionSpec lognormal(double sigma) {
    return {DistributionKind::Lognormal, 0.0, sigma, 0.0};
  }
  static DistributionSpec cauchy() {
    return {DistributionKind::Cauchy, 0.0, 1.0, 0.0};
  }
  static DistributionSpec tukey_g(double g, double mean, double sd) {
    return {DistributionKind::TukeyG, mean, sd, g};
  }

  void validate() const {
    auto bad = [](const std::string& msg) {
      throw Error(ErrorCode::InvalidParameter, msg);
    };
    if (!std::isfinite(mean) || !std::isfinite(sd) || !std::isfinite(g)) {
      bad("distribution parameters must be finite");
    }
    switch (kind) {
      case DistributionKind::Normal:
        if (sd < 0.0) bad("normal sd must be >= 0");
        break;
      case DistributionKind::Lognormal:
        if (sd <= 0.0) bad("lognormal sigma must be > 0");
        break;
      case DistributionKind::Cauchy:
        break;
      case DistributionKind::TukeyG:
        if (g < 0.0) bad("tukey g must be >= 0");
        if (sd <= 0.0) bad("tukey underlying sd must be > 0");
        break;
    }
  }

  // One variate from `rng`.
  double draw(RngStream& rng) const {
    switch (kind) {
      case DistributionKind::Normal:
        return mean + sd * rng.standard_normal();
      case DistributionKind::Lognormal:
        return std::exp(sd * rng.standard_normal());
      case DistributionKind::Cauchy:
        return cauchy_from_uniform(rng.uniform());
      case DistributionKind::TukeyG:
        return tukey_g_transform(mean + sd * rng.standard_normal(), g);
    }
    return 0.0;
  }

  void fill(RngStream& rng, std::vector<double>& out, std::size_t n) const {
    out.resize(n);
    for (auto& v : out) v = draw(rng);
  }
};

inline Sample draw_sample(const DistributionSpec& spec, RngStream& rng,
                          std::size_t n) {
  spec.validate();
  std::vector<double> v;
  spec.fill(rng, v, n);
  return Sample::validate(std::move(v));
}

inline Sample sample_normal(RngStream& rng, double mean, double sd,
                            std::size_t n) {
  return draw_sample(DistributionSpec::normal(mean, sd), rng, n);
}

inline Sample sample_lognormal(RngStream& rng, double sigma, std::size_t n) {
  return draw_sample(DistributionSpec::lognormal(sigma), rng, n);
}

inline Sample sample_cauchy(RngStream& rng, std::size_t n) {
  return draw_sample(DistributionSpec::cauchy(), rng, n);
}

inline Sample sample_tukey_g(RngStream& rng, double g, double mean, double sd,
                             std::size_t n) {
  return draw_sample(DistributionSpec::tukey_g(g, mean, sd), rng, n);
}

enum class OutlierSide { High, Low };

struct ContaminationSpec {
  std::size_t count = 0;
  OutlierSide side = OutlierSide::High;
  // Replacement magnitudes as multiples of the largest |value| in the clean
  // sample.
  double lo = 1.5;
  double hi = 3.0;

  // Default magnitude ranges per side. Low-side outliers are mirrored
  // through zero, so they need a smaller multiple to stay in the regime
  // where a robust estimator keeps its sign.
  static ContaminationSpec high(std::size_t count) {
    return {count, OutlierSide::High, 1.5, 3.0};
  }
  static ContaminationSpec low(std::size_t count) {
    return {count, OutlierSide::Low, 1.05, 1.5};
  }

  void validate() const {
    if (!(lo > 1.0) || !(lo <= hi) || !std::isfinite(hi)) {
      throw Error(ErrorCode::InvalidParameter,
                  "contamination magnitude range must satisfy 1 < lo <= hi");
    }
  }
};

inline const char* to_string(OutlierSide s) noexcept {
  return s == OutlierSide::High ? "high" : "low";
}

// Replaces `spec.count` entries, chosen uniformly without replacement, by
// +-U(lo, hi) * max|x| (sign by side). Size and the other entries unchanged.
inline std::vector<double> contaminate_values(std::vector<double> values,
                                              const ContaminationSpec& spec,
                                              RngStream& rng) {
  spec.validate();
  const std::size_t n = values.size();
  if (spec.count > n / 2) {
    throw Error(ErrorCode::CountTooLarge,
                "contamination count " + std::to_string(spec.count) +
                    " exceeds n/2 for n = " + std::to_string(n));
  }
  if (spec.count == 0) return values;

  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) scale = 1.0;

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t j = 0; j < spec.count; ++j) {
    const auto r = j + static_cast<std::size_t>(rng.uniform_index(n - j));
    std::swap(idx[j], idx[r]);
  }
  const double sign = spec.side == OutlierSide::High ? 1.0 : -1.0;
  for (std::size_t j = 0; j < spec.count; ++j) {
    values[idx[j]] = sign * rng.uniform(spec.lo, spec.hi) * scale;
  }
  return values;
}

inline Sample contaminate(const Sample& s, const ContaminationSpec& spec,
                          RngStream& rng) {
  std::vector<double> v(s.values().begin(), s.values().end());
  return Sample::validate(contaminate_values(std::move(v), spec, rng));
}

}  // namespace cumskew
