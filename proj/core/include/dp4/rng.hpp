#pragma once

#include <cstdint>

namespace dp4 {

// Deterministic splittable generator (splitmix64). Same seed, same stream,
// on every platform; split() forks an independent stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) without modulo bias.
  std::uint64_t uniform(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi] inclusive.
  long long uniform_int(long long lo, long long hi) {
    return lo + static_cast<long long>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rng split() { return Rng(next() ^ 0x6a09e667f3bcc909ull); }

 private:
  std::uint64_t state_;
};

}  // namespace dp4
