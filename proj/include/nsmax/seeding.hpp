#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nsmax {

// FNV-1a over raw bytes; the stable 64-bit hash behind all seed fan-out.
inline std::uint64_t fnv1a64(const void* data, std::size_t size,
                             std::uint64_t h = 1469598103934665603ull) {
  const unsigned char* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

// Child seed for (master seed, component name, index); identical on every
// platform and independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view component,
                                 std::uint64_t index) {
  std::uint64_t h = fnv1a64(&master, sizeof(master));
  h = fnv1a64(component.data(), component.size(), h);
  h = fnv1a64(&index, sizeof(index), h);
  return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace nsmax
