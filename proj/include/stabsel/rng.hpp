#pragma once

#include <cstdint>
#include <random>

namespace stabsel {

/// Deterministic random source. All randomness in the library flows through
/// this wrapper; identical seeds give identical draw sequences on every
/// platform (std::mt19937_64 is fully specified, and the uniform helpers
/// avoid the implementation-defined std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const double span = static_cast<double>(hi) - static_cast<double>(lo) + 1.0;
    int v = lo + static_cast<int>(uniform01() * span);
    return v > hi ? hi : v;  // guard against rounding at the top edge
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Derive an independent child stream; advances this stream by one draw.
  Rng fork() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ull); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace stabsel
