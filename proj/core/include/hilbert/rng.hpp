#ifndef HILBERT_RNG_HPP
#define HILBERT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace hilbert {

/// SplitMix64. Every output is a fixed hash of a counter, so a stream is
/// fully determined by its starting state and streams can be derived per
/// sample without any shared generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return mix(state_ += 0x9e3779b97f4a7c15ULL); }

  /// Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal by Box-Muller.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for one (seed, purpose, index) triple.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t purpose,
                                std::uint64_t index) {
  const std::uint64_t key = SplitMix64::mix(seed ^ SplitMix64::mix(purpose + 1));
  return SplitMix64(SplitMix64::mix(key + SplitMix64::mix(index)));
}

}  // namespace hilbert

#endif  // HILBERT_RNG_HPP
