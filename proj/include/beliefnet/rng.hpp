#pragma once

#include <cstdint>
#include <random>

#include "beliefnet/errors.hpp"

namespace beliefnet {

// Seeding discipline. Every random consumer derives its own substream from a
// master seed with derive_stream(master, purpose). Substreams are independent
// of each other and of how many other substreams exist, so adding seeds or
// purposes never perturbs earlier runs.
//
// Reserved purpose indices:
//   kStreamSignals   per-run signal sampling
//   kStreamRemovals  link-failure removal ordering
//   kStreamTopology  base index for network generation attempts
//                    (attempt k uses kStreamTopology + k)
inline constexpr std::uint64_t kStreamSignals = 1;
inline constexpr std::uint64_t kStreamRemovals = 2;
inline constexpr std::uint64_t kStreamTopology = 100;

// splitmix64 step; also the mixing function behind derive_stream.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Value at position `index + 1` of the splitmix64 sequence seeded at `master`.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master + index * 0x9E3779B97F4A7C15ull;
  return splitmix64(state);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Uniform double in [0, 1) with exactly 53 random bits. Pinned here instead
// of uniform_real_distribution so output streams do not depend on the
// standard library implementation.
inline double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse-CDF draw from a probability row. The row must sum to 1; the final
// index absorbs rounding slack.
inline int sample_pmf(std::mt19937_64& rng, const double* pmf, int len) {
  if (len <= 0) fail(errc::invalid_argument, "sample_pmf: empty pmf");
  const double u = canonical(rng);
  double acc = 0.0;
  for (int s = 0; s + 1 < len; ++s) {
    acc += pmf[s];
    if (u < acc) return s;
  }
  return len - 1;
}

}  // namespace beliefnet
