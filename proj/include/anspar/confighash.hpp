#pragma once

// FNV-1a fingerprints for run configs. Every artifact we write carries the
// hash of the exact configuration that produced it plus the RNG seed, so two
// artifacts can be compared for provenance without diffing whole configs.

#include <cstdint>
#include <string>
#include <string_view>

namespace anspar {

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace anspar
