#pragma once

#include <cstdint>

namespace schur {

// Counter-based 64-bit generator: out = finalize(seed, stream, counter) where
// finalize is the SplitMix64 mixer applied to a combination of the three words.
// Any (seed, stream) pair yields an independent, reproducible stream; drawing
// never mutates shared state, so substreams can be assigned to logical work
// units (e.g. one stream per Monte Carlo sample) independent of thread count.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : base_(mix(mix(seed + 0x9e3779b97f4a7c15ull) ^ mix(stream + 0xbf58476d1ce4e5b9ull))),
        counter_(0) {}

  std::uint64_t next() { return mix(base_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  /// Uniform value in [0, m) by rejection; exact, no modulo bias.
  std::uint64_t below(std::uint64_t m) {
    const std::uint64_t limit = (0 - m) % m;  // = 2^64 mod m
    for (;;) {
      std::uint64_t x = next();
      if (x >= limit) return x % m;
    }
  }

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

 private:
  std::uint64_t base_;
  std::uint64_t counter_;
};

}  // namespace schur
