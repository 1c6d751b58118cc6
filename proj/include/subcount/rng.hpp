#pragma once

#include <cstdint>
#include <random>

namespace subcount {

// Seed-derivation rule: every stream is identified by (base seed, stream
// index); the child seed is splitmix64(base + GOLDEN * (index + 1)). All
// draws go through mt19937_64 plus rejection sampling, so results are
// identical across platforms and worker counts for a fixed base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

  Rng split(std::uint64_t index) const {
    return Rng(splitmix64(seed_ + 0x9E3779B97F4A7C15ULL * (index + 1)));
  }

  std::uint64_t next() { return gen_(); }

  // Unbiased integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
    const std::uint64_t max_ok = UINT64_MAX - rem;
    std::uint64_t u = gen_();
    while (u > max_ok) u = gen_();
    return u % n;
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform_real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace subcount
