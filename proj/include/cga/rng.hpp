#pragma once

// Seedable, platform-independent random streams.
//
// Every stream is a xoshiro256** generator (Blackman & Vigna) whose 256-bit
// state is filled from a SplitMix64 sequence started at a 64-bit stream key.
// Stream keys are derived from a master seed and a tuple of indices with the
// SplitMix64 finalizer, so any (seed, indices) pair names the same stream on
// every platform and in every thread schedule.

#include <array>
#include <cstdint>
#include <limits>

namespace cga {

/// SplitMix64 finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Key of the stream named by (seed, a, b). Distinct index tuples give
/// unrelated keys.
constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(mix64(seed + kGoldenGamma * (a + 1)) ^ mix64(b + 0x632BE59BD9B4E019ULL));
}

/// Per-trial seed used by the experiment harness: the (i+1)-th output of a
/// SplitMix64 sequence started at the master seed.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept {
  return mix64(master + kGoldenGamma * (trial + 1));
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}
  constexpr std::uint64_t next() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0. Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t key) noexcept {
    SplitMix64 sm(key);
    for (auto& word : s_) word = sm.next();
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0,1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by Lemire's nearly-divisionless method.
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace cga
