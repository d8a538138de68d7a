#pragma once

#include <cassert>
#include <cstdint>

namespace flexcore {

// splitmix64 (Steele/Lea/Flood). The constants below are part of the
// output contract: streams are identical on every platform, and every
// sampled report records the seed it was drawn from.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Rejection sampling keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n) noexcept {
    assert(n > 0);
    const std::uint64_t limit = n * (~std::uint64_t{0} / n);
    for (;;) {
      const std::uint64_t v = next();
      if (v < limit) return v % n;
    }
  }

  // Uniform integer in [lo, hi], both ends included.
  long long range(long long lo, long long hi) noexcept {
    assert(lo <= hi);
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace flexcore
