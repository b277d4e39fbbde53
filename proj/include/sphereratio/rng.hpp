#pragma once

#include <cstdint>
#include <random>

#include "sphereratio/vec3.hpp"

namespace sphereratio {

/// Deterministic uniform generator. A fixed seed yields an identical stream on
/// every platform: the mt19937_64 sequence is pinned by the standard, and the
/// double extraction below avoids std::uniform_real_distribution, whose output
/// is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

  /// Uniform point on the unit sphere (area measure).
  Vec3 unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 6.283185307179586476925287);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sphereratio
