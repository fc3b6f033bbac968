#pragma once

#include <cstdint>
#include <string_view>

namespace prymscope {

// FNV-1a, 64-bit. Used for invariant fingerprints and catalog checksums.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t seed = 1469598103934665603ull) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace prymscope
