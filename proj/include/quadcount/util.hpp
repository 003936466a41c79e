#pragma once

#include <cstdint>

#include "quadcount/errors.hpp"

namespace quadcount {

constexpr std::uint64_t choose2(std::uint64_t n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

inline std::uint64_t choose3(std::uint64_t n) {
  if (n < 3) return 0;
  unsigned __int128 r = (unsigned __int128)n * (n - 1) * (n - 2) / 6;
  if (r > ~(std::uint64_t)0) throw SizeError("3-subset count overflows 64 bits");
  return (std::uint64_t)r;
}

inline std::uint64_t choose4(std::uint64_t n) {
  if (n < 4) return 0;
  unsigned __int128 r = (unsigned __int128)n * (n - 1) * (n - 2) * (n - 3) / 24;
  if (r > ~(std::uint64_t)0) throw SizeError("4-subset count overflows 64 bits");
  return (std::uint64_t)r;
}

// Stateless 64-bit mixer; the per-edge counter-based RNG and all test
// shuffles key off it so results are order- and platform-independent.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0,1) from a mixed 64-bit value.
constexpr double to_unit_interval(std::uint64_t bits) {
  return (double)(bits >> 11) * 0x1.0p-53;
}

}  // namespace quadcount
