#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace hardcopy {

// SplitMix64 finalizer, used to whiten seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream seed derivation: seed(master, i) = splitmix64(master + (i+1) * 2^64/phi).
// Replica i of an ensemble always draws from this stream, independent of how
// replicas are scheduled onto threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + 0x9E3779B97F4A7C15ull * (stream + 1));
}

// std::mt19937_64 engine (its sequence is fixed by the standard) with
// hand-specified sampling on top, so streams are bit-exact across standard
// library implementations. std::uniform_int_distribution is not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Unbiased uniform draw from {0, ..., n-1} via bitmask rejection.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = ~0ull >> std::countl_zero(n - 1);
    std::uint64_t x;
    do {
      x = eng_() & mask;
    } while (x >= n);
    return x;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double canonical() { return double(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return canonical() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hardcopy
