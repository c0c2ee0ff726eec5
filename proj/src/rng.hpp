#pragma once

// Deterministic, platform-independent random streams for the verification
// harness.  splitmix64 keyed by (seed, stream) gives every trial its own
// reproducible generator regardless of how trials are scheduled across
// threads; Gaussians come from Box-Muller (std::normal_distribution is not
// bit-stable across standard libraries, and byte-identical reports are part
// of the tool contract).

#include <cmath>
#include <complex>
#include <cstdint>

namespace wpb {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream) {
    // Scramble seed and stream through one round each so that nearby
    // (seed, stream) pairs land in unrelated states.
    std::uint64_t s = seed;
    (void)splitmix64_next(s);
    s ^= 0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull;
    (void)splitmix64_next(s);
    state_ = s;
  }

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  // Uniform in the open interval (0, 1); never returns 0 or 1.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal, Box-Muller with a cached spare.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Standard complex Gaussian with E|c|^2 = 1 (components N(0, 1/2)).
  std::complex<double> complex_gaussian() {
    const double scale = std::sqrt(0.5);
    const double re = gaussian();
    const double im = gaussian();
    return {scale * re, scale * im};
  }

 private:
  std::uint64_t state_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wpb
