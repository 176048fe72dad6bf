#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace opcheck {

/// The project's pinned deterministic 64-bit generator: xoshiro256** with
/// splitmix64 state expansion from the seed. The integer stream depends only
/// on the seed, never on the platform. Derived draws are fixed as follows:
///   uniform01      -- top 53 bits of the next word, scaled by 2^-53
///   gaussian       -- Box-Muller on two uniforms (second value cached)
///   gaussian_pair  -- the (cos, sin) pair of one Box-Muller transform
///   complex Gaussian CN(0,1) -- (g1 + i*g2)/sqrt(2)
///   uniform_below(n) -- rejection sampling on the raw stream
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) {
      x += 0x9E3779B97F4A7C15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
      s = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    const double u2 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * pi_ * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Standard complex Gaussian CN(0,1): E|z|^2 = 1.
  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re * inv_sqrt2_, im * inv_sqrt2_};
  }

  std::uint64_t uniform_below(std::uint64_t n) {
    // rejection keeps the draw exactly uniform
    const std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  static constexpr double pi_ = 3.14159265358979323846;
  static constexpr double inv_sqrt2_ = 0.70710678118654752440;

  std::uint64_t state_[4]{};
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace opcheck
