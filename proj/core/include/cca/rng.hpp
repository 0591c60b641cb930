#pragma once

#include <cstdint>

namespace cca {

// Deterministic 64-bit stream (splitmix64). Same seed, same sequence, on
// every platform; corpus generation and reduction draws key off it.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~0ULL / bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Independent stream for a subtask; stable under evaluation order.
  RandomSource fork(std::uint64_t salt) const {
    RandomSource child(state_ ^ (salt * 0xD1B54A32D192ED03ULL + 1));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace cca
