#pragma once

#include <cstdint>
#include <array>
#include <cstddef>
#include <span>
#include <utility>

namespace xforge {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Portable seeded stream: xoshiro256** whose 256-bit state is filled by
/// SplitMix64 from a key derived from (seed, stream_id). The same pair gives
/// the same sequence on every platform. Bounded integers and doubles are
/// produced by code in this class, never by <random> distributions, whose
/// output is implementation-defined.
class SeededRng {
 public:
  SeededRng(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  /// Raw xoshiro256** state, for known-answer tests against the reference
  /// implementation. seed() and stream_id() report 0.
  static SeededRng from_state(const std::array<std::uint64_t, 4>& state) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
  /// bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// In-place Fisher-Yates shuffle (descending index, Durstenfeld form).
  template <typename T>
  void shuffle(std::span<T> values) noexcept {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  SeededRng() noexcept : seed_(0), stream_(0), s_{} {}

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t s_[4];
};

}  // namespace xforge
