#pragma once

#include <cstdint>

namespace tpn {

// splitmix64; deterministic across platforms, unlike std::mt19937 distributions.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  Prng fork(std::uint64_t salt) { return Prng(next() ^ (salt * 0x9e3779b97f4a7c15ull)); }

 private:
  std::uint64_t state_;
};

}  // namespace tpn
