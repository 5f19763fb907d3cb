#pragma once

#include <cstdint>

#include "stickknot/vec3.hpp"

namespace stickknot {

// SplitMix64 (Steele, Lea, Flood 2014). All randomness in the library flows
// through this generator; Monte Carlo substreams are derived per sample index
// so that tallies do not depend on how samples are partitioned over workers.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1) with 53 random bits
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  Vec3d next_cube_point() { return {next_double(), next_double(), next_double()}; }

  // uniform direction on the unit sphere (rejection from the cube)
  Vec3d next_unit_vector() {
    for (;;) {
      const Vec3d v{2.0 * next_double() - 1.0, 2.0 * next_double() - 1.0,
                    2.0 * next_double() - 1.0};
      const double n2 = dot(v, v);
      if (n2 > 1e-4 && n2 <= 1.0) {
        const double inv = 1.0 / std::sqrt(n2);
        return {v.x * inv, v.y * inv, v.z * inv};
      }
    }
  }

  // nonzero integer direction for exact-mode projections; the scale of a
  // projection direction never affects the resulting diagram
  Vec3q next_int_direction(int range = 1024) {
    for (;;) {
      const auto pick = [&] {
        return static_cast<long long>(next() % (2 * static_cast<std::uint64_t>(range) + 1)) -
               range;
      };
      const long long x = pick(), y = pick(), z = pick();
      if (x != 0 || y != 0 || z != 0) return {Rational(x), Rational(y), Rational(z)};
    }
  }
};

// Deterministic substream key for sample index i of a seeded run.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  SplitMix64 a(seed);
  SplitMix64 b(a.next() ^ tag);
  SplitMix64 c(b.next() ^ index);
  return c.next();
}

}  // namespace stickknot
