#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace frifc {

// SplitMix64: a counter hashed through two xor-multiply rounds.  Chosen over
// <random> engines because the standard distributions are
// implementation-defined, and traces here must reproduce bit-for-bit on any
// toolchain.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // [0,1) with the full 53-bit mantissa.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased enough for population indices (bias < 2^-53 of a draw).  The
  // clamp catches the one mantissa pattern that rounds n*u up to n.
  int uniform_int(int n) {
    const int k = static_cast<int>(static_cast<double>(n) * uniform());
    return k < n ? k : n - 1;
  }

  // Box-Muller, fresh pair per call so the draw count stays predictable.
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // One hash round, for deriving child seeds.
  static std::uint64_t mix(std::uint64_t x) { return SplitMix64(x).next(); }

 private:
  std::uint64_t state_;
};

}  // namespace frifc
