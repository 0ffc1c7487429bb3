#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace sense {

/**
 * Counter-based random substream.
 *
 * Every (seed, trial, pair) tuple maps to an independent deterministic
 * stream, so Monte Carlo trials can be generated on any number of threads
 * in any order and still produce bit-identical draws. The generator is a
 * splitmix64 walk over a key derived by mixing the tuple; draws do not
 * depend on any global state.
 */
class Substream {
 public:
  explicit Substream(std::uint64_t key) : state_(mix(key ^ kPhi)) {}

  /// Stream for one (trial, pair) cell of a Monte Carlo run.
  static Substream derive(std::uint64_t seed, std::uint64_t trial, std::uint64_t pair) {
    std::uint64_t key = mix(seed + kPhi);
    key = mix(key ^ (trial + 0x9e3779b97f4a7c15ULL));
    key = mix(key ^ (pair + 0xbf58476d1ce4e5b9ULL));
    return Substream(key);
  }

  std::uint64_t next_u64() {
    state_ += kPhi;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (platform-independent, unlike
  /// std::normal_distribution).
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Circularly symmetric complex Gaussian with E|z|^2 = variance.
  std::complex<double> next_complex_gaussian(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = s * next_gaussian();
    const double im = s * next_gaussian();
    return {re, im};
  }

 private:
  static constexpr std::uint64_t kPhi = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sense
