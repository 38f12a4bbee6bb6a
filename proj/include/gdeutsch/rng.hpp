#pragma once

#include <cstdint>
#include <limits>

namespace gdeutsch {

/// SplitMix64 (Steele, Lea, Flood 2014). Its state advances by a fixed
/// increment, so stream position is a pure function of (seed, draws taken);
/// used to give each Monte-Carlo trial an independent, reproducible substream.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += kGamma;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

 private:
  std::uint64_t state_;
};

/// Stream for item `index` under `seed`; independent of how items are
/// distributed across threads.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(SplitMix64::mix(seed) ^ SplitMix64::mix(index * SplitMix64::kGamma + 1));
}

/// Uniform double in [0, 1) from the top 53 bits of one draw.
template <class Rng>
double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace gdeutsch
