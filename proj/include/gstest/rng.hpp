#pragma once

#include <cstdint>

namespace gstest::rng {

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream: the word for (key, a, b) depends only on those
// inputs, so draws are reproducible under any evaluation order.
constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t a,
                               std::uint64_t b = 0) {
  std::uint64_t h = mix64(key);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  return h;
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace gstest::rng
