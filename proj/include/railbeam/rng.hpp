#pragma once
// Counter-based pseudo-random source for the trial simulations. Each trial
// owns an independent stream addressed by (seed, stream), so trials can run
// on any thread in any order and still draw identical values. Gaussians come
// from a two-uniform Box-Muller step with no cached second value, keeping
// the draw count per trial fixed.

#include <cmath>
#include <cstdint>

namespace railbeam {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix64(mix64(seed + 0x9e3779b97f4a7c15ull) ^ stream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Uniform in (0, 1]; never 0, so it is safe under a logarithm.
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double next_gaussian() {
    double u1 = next_unit();
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace railbeam
