#pragma once

#include <cstdint>

namespace steiner {

// SplitMix64.  The only random number generator in the library: every
// randomized routine takes an explicit 64-bit seed and derives its whole
// stream from it, so identical seeds give identical runs on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi] by rejection, exact for any range.
  long long uniform(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<long long>(x % span);
  }

  // A fresh deterministic stream for a named subtask of this one.
  SplitMix64 fork(std::uint64_t tag) {
    SplitMix64 child(next() ^ (0x632be59bd9b4e019ull * (tag + 1)));
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace steiner
