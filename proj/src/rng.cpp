#include "xforge/rng.hpp"

namespace xforge {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : seed_(seed), stream_(stream_id) {
  // Key mixes both words so neighbouring streams start far apart.
  std::uint64_t state = splitmix64_mix(seed) ^ splitmix64_mix(stream_id + kGamma);
  for (auto& word : s_) {
    state += kGamma;
    word = splitmix64_mix(state);
  }
}

SeededRng SeededRng::from_state(const std::array<std::uint64_t, 4>& state) noexcept {
  SeededRng rng;
  for (std::size_t i = 0; i < 4; ++i) rng.s_[i] = state[i];
  return rng;
}

std::uint64_t SeededRng::next_u64() noexcept {
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

std::uint64_t SeededRng::uniform_below(std::uint64_t bound) noexcept {
  unsigned __int128 product = static_cast<unsigned __int128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace xforge
