#include "vexf/sampling.hpp"

#include <cstdlib>
#include <string>

namespace vexf {

long uniform_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = Rng::max() - (Rng::max() % span + 1) % span;
  std::uint64_t r = rng();
  while (r > limit) r = rng();
  return lo + static_cast<long>(r % span);
}

std::size_t default_sample_count() {
  if (const char* env = std::getenv("VEXF_SAMPLE_COUNT")) {
    try {
      const long n = std::stol(env);
      if (n >= 0) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return 100;
}

std::vector<Vec> sample_points(Index d, std::uint64_t seed, std::size_t random_count) {
  std::vector<Vec> pts;
  for (Index i = 0; i < d; ++i) {
    pts.push_back(unit_vector(d, i));
    pts.push_back(-unit_vector(d, i));
  }
  pts.push_back(Vec::Ones(d));
  Rng rng(seed);
  for (std::size_t k = 0; k < random_count; ++k) {
    Vec x(d);
    for (Index i = 0; i < d; ++i) x(i) = uniform_int(rng, -10, 10);
    pts.push_back(std::move(x));
  }
  return pts;
}

std::vector<Vec> sample_points(Index d, std::uint64_t seed) {
  return sample_points(d, seed, default_sample_count());
}

}  // namespace vexf
