#pragma once
#include <cstdint>
#include <limits>

namespace racov {

__extension__ typedef unsigned __int128 uint128;

// SplitMix64. Small state, so one generator per Monte Carlo trial is cheap.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by multiply-shift; bias is < bound / 2^64.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<uint128>((*this)()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Independent stream for trial `t` of a run seeded with `seed`. Depends only
// on (seed, t), so any partition of trials over workers draws the same numbers.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t t) {
  SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (t + 1)));
  return SplitMix64(mix());
}

}  // namespace racov
