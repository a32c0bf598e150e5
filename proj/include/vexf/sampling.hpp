#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vexf/rational.hpp"

namespace vexf {

/// Seeded generator used for every randomized routine. mt19937_64 is fully
/// specified by the standard, so outputs are portable across toolchains.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] derived directly from raw engine output (the
/// standard distributions are implementation defined).
long uniform_int(Rng& rng, long lo, long hi);

/// Default number of random points in sample_points(); VEXF_SAMPLE_COUNT
/// overrides it when set to a nonnegative integer.
std::size_t default_sample_count();

/// Points used for pointwise function-equality audits: every ±e_i, the
/// all-ones vector, then `random_count` integer vectors in [-10, 10]^d.
std::vector<Vec> sample_points(Index d, std::uint64_t seed, std::size_t random_count);
std::vector<Vec> sample_points(Index d, std::uint64_t seed);

}  // namespace vexf
