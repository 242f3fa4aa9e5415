#pragma once

#include <cstdint>

namespace rga {

// SplitMix64. One 64-bit word of state, full 2^64 period, identical output
// stream for a given seed on every platform. Everything downstream that is
// advertised as reproducible (graph generation, Monte Carlo trials, sweeps)
// bottoms out in this generator.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace rga
