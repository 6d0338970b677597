#pragma once

// Portable deterministic sampling helpers. The standard distributions are
// implementation-defined, so seeded outputs would differ between libraries.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace syscat {

using Rng = std::mt19937_64;

/// Uniform in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Uniform integer in [0, n).
inline std::uint64_t below(Rng& rng, std::uint64_t n) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[below(rng, i)]);
  }
}

}  // namespace syscat
