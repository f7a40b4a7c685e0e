#pragma once

#include <cstdint>

namespace guessing {

// SplitMix64 finalizer. Used in counter mode: the k-th draw of the j-th
// sample is a pure function of (seed, j, k), so Monte Carlo runs are
// reproducible bit-for-bit regardless of thread count or platform.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  // Up to kDrawsPerSample independent uniforms per sample index.
  static constexpr std::uint64_t kDrawsPerSample = 16;

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  double uniform(std::uint64_t sample, std::uint64_t draw) const {
    std::uint64_t ctr = sample * kDrawsPerSample + draw;
    std::uint64_t z = mix64(seed_ + ctr * 0x9E3779B97F4A7C15ull);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

// Small sequential generator for test fuzzing.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace guessing
