#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace powerlaw {

/// SplitMix64. Small, fast, and identical on every platform, which keeps
/// seeded runs byte-reproducible.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1].
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }
};

/// Stream seed for restart `index` derived from the master seed by counter.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 mix(master);
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i <= index; ++i) s = mix.next();
  return s;
}

/// Uniform sample from the ball of the given radius in R^dim, appended flat.
inline void sample_in_ball(SplitMix64& rng, int dim, double radius, std::vector<double>& out) {
  double norm2 = 0.0;
  const std::size_t base = out.size();
  for (int d = 0; d < dim; ++d) {
    const double g = rng.normal();
    out.push_back(g);
    norm2 += g * g;
  }
  const double norm = std::sqrt(norm2);
  const double r = radius * std::pow(rng.uniform01(), 1.0 / dim);
  const double scale = (norm > 0.0) ? r / norm : 0.0;
  for (int d = 0; d < dim; ++d) out[base + d] *= scale;
}

}  // namespace powerlaw
