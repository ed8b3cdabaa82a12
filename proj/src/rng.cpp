#include "tropattack/rng.hpp"

#include "tropattack/error.hpp"

namespace tropattack {

std::uint64_t CounterRng::next() {
  ++counter_;
  std::uint64_t z = seed_ + counter_ * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t CounterRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ValidationError("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t floor = (0 - span) % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x < floor);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

double CounterRng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace tropattack
