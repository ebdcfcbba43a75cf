#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace cumskew {

// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// FNV-1a over the bytes of `text`; stable across platforms.
constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Stream id for replication `rep` of the condition named `id`.
constexpr std::uint64_t replication_stream_id(std::string_view id,
                                              std::uint64_t rep) noexcept {
  return mix64(fnv1a64(id) ^ mix64(rep));
}

// A deterministic random stream identified by (base_seed, stream_id).
//
// Backed by std::mt19937_64, whose output sequence is fixed by the standard.
// Conversions to uniform and normal variates are done here rather than with
// <random> distributions, which are implementation-defined. Single owner:
// not safe to share between threads.
class RngStream {
 public:
  RngStream(std::uint64_t base_seed, std::uint64_t stream_id)
      : base_seed_(base_seed),
        stream_id_(stream_id),
        engine_(mix64(mix64(base_seed) ^ stream_id)) {}

  std::uint64_t base_seed() const noexcept { return base_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer on [0, bound). Bias is below 2^-53 * bound.
  std::uint64_t uniform_index(std::uint64_t bound) {
    const auto r = static_cast<std::uint64_t>(uniform() *
                                              static_cast<double>(bound));
    return r < bound ? r : bound - 1;
  }

  // Standard normal via the Marsaglia polar method; both deviates of each
  // accepted pair are used.
  double standard_normal() {
    if (spare_) {
      const double z = *spare_;
      spare_.reset();
      return z;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    return u * f;
  }

 private:
  std::uint64_t base_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

inline RngStream rng_stream(std::uint64_t base_seed, std::uint64_t stream_id) {
  return RngStream(base_seed, stream_id);
}

// Name of the normal generator, for run metadata.
inline constexpr std::string_view kNormalMethod = "marsaglia_polar";
inline constexpr std::string_view kEngineName = "mt19937_64";

}  // namespace cumskew
