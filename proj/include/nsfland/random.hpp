#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace nsfland {

/// Engine used everywhere a seeded stream is needed. Its output sequence is
/// fixed by the standard, so results do not depend on the standard library.
using Rng = std::mt19937_64;

/// SplitMix64 finaliser. A bijection on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Child seed `index` of `seed`. For a fixed parent the map index -> child is
/// injective: seed + golden * (index + 1) is distinct modulo 2^64 for every
/// index because the multiplier is odd, and splitmix64 is a bijection.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// Uniform integer in [0, bound) by rejection. std::uniform_int_distribution is
/// implementation-defined, this is not.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

/// Fisher-Yates with uniform_below.
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace nsfland
