#pragma once

#include <cstdint>
#include <random>

namespace pvd {

// Default seed for every sampled check. Bare CLI invocations must produce
// byte-identical output run to run, so the seed is a fixed constant rather
// than anything time derived.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Deterministic stream on top of std::mt19937_64. Reduction is by modulo:
// mt19937_64 is specified bit for bit by the standard, while the
// distribution classes are not, and the bias is irrelevant at the sample
// sizes used here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform value in [0, n); returns 0 when n == 0.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    return engine_() % n;
  }

  // Uniform value in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pvd
