#pragma once

#include <cstdint>

namespace tropattack {

// SplitMix64 as a counter-based generator: output k (k = 1, 2, ...) is
// mix(seed + k * 0x9e3779b97f4a7c15) with the standard SplitMix64 finaliser.
// Derived quantities:
//   uniform_int(lo, hi): span = hi - lo + 1 (mod 2^64); draw x until
//     x >= (2^64 - span) mod span, return lo + x mod span.
//   uniform01(): (x >> 11) * 2^-53.
// Any implementation following these three rules reproduces our transcripts.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next();
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double uniform01();

  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace tropattack
