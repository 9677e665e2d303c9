#pragma once

#include <cstdint>

namespace ksat {

// SplitMix64 generator. Chosen over std::mt19937 because the full stream,
// the bounded-sampling algorithm, and the substream derivation are pinned
// here, so golden tests stay byte-identical across standard libraries.
//
// Substream rule (fixed for reproducibility):
//   substream(seed, index).state = mix64(seed ^ mix64(GOLDEN * (index + 1)))
// where mix64 is the SplitMix64 finalizer and GOLDEN = 0x9E3779B97F4A7C15.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Independent stream for (seed, index); used one stream per Monte Carlo
  // trial so trials can run on any thread in any order.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix64(seed ^ mix64(kGolden * (index + 1))));
  }

  std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Unbiased integer in [0, bound) via Lemire's multiply-shift with rejection.
  std::uint64_t uniform_below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool coin() { return (next() >> 63) != 0; }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace ksat
