#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace nilrank {

/// Uniform integer in [lo, hi] from raw engine output by rejection sampling.
/// Unlike std::uniform_int_distribution the sequence is fixed by the
/// standard, so seeded runs reproduce across toolchains.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo,
                                std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<std::int64_t>(draw % span);
}

/// Uniform in [lo, hi] \ {0}; requires lo < 0 < hi.
inline std::int64_t uniform_nonzero(std::mt19937_64& rng, std::int64_t lo,
                                    std::int64_t hi) {
  const std::int64_t v = uniform_int(rng, lo, hi - 1);
  return v >= 0 ? v + 1 : v;
}

}  // namespace nilrank
