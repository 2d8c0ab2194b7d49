// Seeded PRNG and the per-trial seed derivation used by every randomized
// component. The derivation function is the compatibility contract for
// reproducible experiments; the generator behind it is an implementation
// detail.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace mbg {

// Fixed 64-bit avalanche (splitmix64 finalizer).
constexpr std::uint64_t avalanche64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// seed_i = avalanche(base XOR (i+1) * golden_gamma), all mod 2^64.
constexpr std::uint64_t derive_trial_seed(std::uint64_t base, std::uint64_t index) {
  return avalanche64(base ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
}

// xoshiro256** seeded through splitmix64. Self-contained so that streams are
// identical on every platform we build on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      sm += 0x9E3779B97F4A7C15ULL;
      word = avalanche64(sm);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, bound), unbiased via rejection. bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unbiased Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace mbg
