#pragma once

#include <cstdint>
#include <initializer_list>

namespace pvdb {

// Counter-based deterministic randomness. Every draw is a pure function of
// the key words, so generation order and parallelism cannot change results.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t det_u64(std::initializer_list<std::uint64_t> key) {
  std::uint64_t acc = 0x5851f42d4c957f2dULL;
  for (std::uint64_t word : key) acc = splitmix64(acc ^ word);
  return splitmix64(acc);
}

/// Uniform draw in [lo, hi]; modulo bias is irrelevant here.
inline std::int64_t det_range(std::int64_t lo, std::int64_t hi,
                              std::initializer_list<std::uint64_t> key) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(det_u64(key) % span);
}

/// Uniform draw in [0, 1).
inline double det_unit(std::initializer_list<std::uint64_t> key) {
  return static_cast<double>(det_u64(key) >> 11) * 0x1.0p-53;
}

}  // namespace pvdb
