#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace boolevo {

// Bijective 64-bit finalizer (the SplitMix64 output function). Used for
// stream seeding and for deriving per-run seeds from a master seed.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  return mix64(state += 0x9e3779b97f4a7c15ULL);
}

// Deterministic pseudo-random stream (xoshiro256**): the same 64-bit seed
// yields the same draw sequence on every platform. Single-owner; never share
// one instance across threads.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      word = splitmix64(sm);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). Bitmask rejection keeps the result
  // unbiased; bound == 1 consumes no draw.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) {
      throw std::invalid_argument("next_below: bound must be positive");
    }
    if (bound == 1) {
      return 0;
    }
    const std::uint64_t mask =
        bound > (std::uint64_t{1} << 63) ? ~std::uint64_t{0} : std::bit_ceil(bound) - 1;
    std::uint64_t v;
    do {
      v = next_u64() & mask;
    } while (v >= bound);
    return v;
  }

 private:
  std::uint64_t state_[4];
};

// First k entries of a uniformly random permutation of {0,...,n-1} via
// partial Fisher-Yates. Order is significant: callers use it both for
// k-subset sampling and for tournament draw order.
template <class Rng>
std::vector<std::size_t> sample_indices(Rng& rng, std::size_t n, std::size_t k) {
  if (k > n) {
    throw std::invalid_argument("sample_indices: k exceeds n");
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i + 1 < n && i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace boolevo
