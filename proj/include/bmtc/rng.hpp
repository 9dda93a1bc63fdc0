#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bmtc {

// Deterministic RNG used everywhere seeds matter. Distributions are
// hand-rolled on top of mt19937_64 so that two builds of the same binary
// produce bit-identical streams (std::*_distribution is implementation
// defined).
class Rng {
public:
  explicit Rng(uint64_t seed) : engine_(seed), seed_mix_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t n) {
    // Rejection sampling keeps the draw unbiased.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  int index(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

  // Box-Muller, one value cached.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Derives an independent stream, e.g. one per matrix cell or clip.
  Rng fork(uint64_t stream_id) const {
    return Rng(seed_mix_ ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1)));
  }

private:
  std::mt19937_64 engine_;
  uint64_t seed_mix_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Stable stream ids from strings, for per-clip / per-cell forks.
inline uint64_t stream_id(const std::string& name) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace bmtc
