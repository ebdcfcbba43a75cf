#pragma once

// Randomized property checks for the CS estimator, shared by the unit tests
// and the acceptance runner. Each check runs `cases` cases from a fixed seed
// and reports the number of violations plus the worst observed error.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cumskew/lorenz.hpp"
#include "cumskew/sample.hpp"
#include "cumskew/skew.hpp"
#include "oracle.hpp"

namespace cumskew::props {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst = 0.0;

  bool ok() const { return cases > 0 && failures == 0; }
};

// Mixed-shape random data: normal, lognormal, uniform, Cauchy-like and
// small-integer (tie-heavy) samples, with random location and scale.
inline std::vector<double> random_values(std::mt19937_64& gen, std::size_t n) {
  std::uniform_int_distribution<int> shape(0, 4);
  std::normal_distribution<double> z;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> small(1, 6);
  const double loc = std::uniform_real_distribution<double>(-50.0, 50.0)(gen);
  const double scale = std::exp(std::uniform_real_distribution<double>(-3.0, 3.0)(gen));
  const int kind = shape(gen);
  std::vector<double> v(n);
  for (auto& x : v) {
    switch (kind) {
      case 0: x = loc + scale * z(gen); break;
      case 1: x = scale * std::exp(z(gen)); break;
      case 2: x = loc + scale * u(gen); break;
      case 3: x = loc + scale * std::tan(3.14159265358979 * (u(gen) - 0.5)); break;
      default: x = small(gen); break;
    }
  }
  return v;
}

inline std::size_t random_n(std::mt19937_64& gen, std::size_t lo = 2, std::size_t hi = 1000) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
}

inline double cs_of(const std::vector<double>& v) {
  return cumulative_skew(Sample::validate(v));
}

inline void record(Outcome& o, double err, double tol) {
  ++o.cases;
  o.worst = std::max(o.worst, err);
  if (!(err <= tol)) ++o.failures;
}

inline Outcome scale_location_invariance(std::size_t cases, std::uint64_t seed = 1) {
  Outcome o{"scale/location invariance (rel 1e-9)"};
  std::mt19937_64 gen(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    auto v = random_values(gen, random_n(gen));
    const double a = std::exp(std::uniform_real_distribution<double>(-4.0, 4.0)(gen));
    const double b = std::uniform_real_distribution<double>(-100.0, 100.0)(gen);
    std::vector<double> t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = a * v[i] + b;
    const double base = cs_of(v);
    const double moved = cs_of(t);
    // relative error with a denormal-scale floor for CS == 0 cases
    const double err = std::fabs(moved - base) / std::max(std::fabs(base), 1e-3);
    record(o, err, 1e-9);
  }
  return o;
}

inline Outcome reflection_antisymmetry(std::size_t cases, std::uint64_t seed = 2) {
  Outcome o{"reflection antisymmetry (1e-9)"};
  std::mt19937_64 gen(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    auto v = random_values(gen, random_n(gen));
    std::vector<double> neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    record(o, std::fabs(cs_of(neg) + cs_of(v)), 1e-9);
  }
  return o;
}

// {mu +- delta_k} with dyadic delta so the pairs are exactly mirrored.
inline Outcome mirrored_pairs_are_symmetric(std::size_t cases, std::uint64_t seed = 3) {
  Outcome o{"mirrored pairs give CS = 0 (1e-12)"};
  std::mt19937_64 gen(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 500)(gen);
    const double mu = std::uniform_int_distribution<int>(-1000, 1000)(gen) / 8.0;
    std::vector<double> v;
    for (std::size_t j = 0; j < k; ++j) {
      const double delta = std::uniform_int_distribution<int>(0, 1 << 20)(gen) / 1024.0;
      v.push_back(mu + delta);
      v.push_back(mu - delta);
    }
    if (gen() & 1) v.push_back(mu);
    std::shuffle(v.begin(), v.end(), gen);
    record(o, std::fabs(cs_of(v)), 1e-12);
  }
  return o;
}

inline Outcome finite_bound(std::size_t cases, std::uint64_t seed = 4) {
  Outcome o{"|CS| <= 1 - 2/n + 1e-12"};
  std::mt19937_64 gen(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = random_n(gen);
    auto v = random_values(gen, n);
    // occasionally a single extreme outlier on either side
    if (c % 3 == 0) v[0] = (c % 2 ? 1e12 : -1e12);
    const double bound = 1.0 - 2.0 / static_cast<double>(n);
    const double excess = std::fabs(cs_of(v)) - bound;
    record(o, std::max(excess, 0.0), 1e-12);
  }
  return o;
}

// n-1 ones and one M > 1: gaps are proportional to i, so CS = 1 - 2/n.
inline Outcome single_outlier_attains_bound(std::size_t cases, std::uint64_t seed = 5) {
  Outcome o{"(n-1 ones + M) gives CS = 1 - 2/n (1e-12)"};
  std::mt19937_64 gen(seed);
  const double ms[] = {2.0, 10.0, 1e6};
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = random_n(gen);
    std::vector<double> v(n, 1.0);
    v[std::uniform_int_distribution<std::size_t>(0, n - 1)(gen)] = ms[c % 3];
    const double expected = 1.0 - 2.0 / static_cast<double>(n);
    record(o, std::fabs(cs_of(v) - expected), 1e-12);
  }
  return o;
}

inline Outcome tie_permutation_invariance(std::size_t cases, std::uint64_t seed = 6) {
  Outcome o{"tie-permutation invariance (exact)"};
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> small(1, 6);
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<double> v(random_n(gen));
    for (auto& x : v) x = small(gen) * 0.1;
    auto w = v;
    std::shuffle(w.begin(), w.end(), gen);
    record(o, std::fabs(cs_of(v) - cs_of(w)), 0.0);
  }
  return o;
}

// Every multiset of size 2..8 over {1..6} against exact rational CS.
inline Outcome exact_rational_oracle() {
  Outcome o{"exact rational oracle, n <= 8, values 1..6 (1e-12)"};
  for (std::size_t n = 2; n <= 8; ++n) {
    oracle::for_each_multiset(n, 1, 6, [&](const std::vector<std::int64_t>& x) {
      std::vector<double> v(x.begin(), x.end());
      const double expected = oracle::to_double(oracle::exact_cs(x));
      record(o, std::fabs(cs_of(v) - expected), 1e-12);
    });
  }
  return o;
}

inline Outcome raw_canonical_agreement(std::size_t cases, std::uint64_t seed = 7) {
  Outcome o{"raw vs canonical CS for positive-mean data (1e-9)"};
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> z;
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<double> v(random_n(gen));
    const double sigma = std::uniform_real_distribution<double>(0.1, 2.0)(gen);
    for (auto& x : v) x = std::exp(sigma * z(gen));
    record(o, std::fabs(cs_of(v) - oracle::raw_cs(v)), 1e-9);
  }
  return o;
}

// On the canonical shift every gap is >= 0 and the gaps are concave
// (second differences measured relative to the largest gap).
inline Outcome gap_structure(std::size_t cases, std::uint64_t seed = 8) {
  Outcome o{"canonical gaps nonnegative and concave"};
  std::mt19937_64 gen(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    auto v = random_values(gen, random_n(gen, 3, 1000));
    const auto grid = lorenz_grid(Sample::validate(v), true);
    double scale = 1.0;
    for (double d : grid.d) scale = std::max(scale, d);
    double violation = 0.0;
    for (double d : grid.d) violation = std::max(violation, -d);
    for (std::size_t i = 0; i + 2 < grid.d.size(); ++i) {
      const double second = grid.d[i + 2] - 2.0 * grid.d[i + 1] + grid.d[i];
      violation = std::max(violation, second / scale);
    }
    record(o, violation, 1e-12);
  }
  return o;
}

}  // namespace cumskew::props
