#include "vexf/instances.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vexf/errors.hpp"
#include "vexf/lex_lp.hpp"
#include "vexf/polytopes.hpp"
#include "vexf/sampling.hpp"

namespace vexf {

namespace {

void require_range(long value, long lo, long hi, const char* what) {
  if (value < lo || value > hi) {
    throw PreconditionError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "], got " + std::to_string(value));
  }
}

// Known vertex sets: only sort, no LP pruning needed.
VPolytope canonical(const std::vector<Vec>& vertices, Index d) {
  return VPolytope{sorted_unique_rows(stack_rows(vertices, d))};
}

}  // namespace

PolytopePair cube(Index d) {
  require_range(d, 1, 10, "cube dimension");
  std::vector<Vec> verts;
  for (long mask = 0; mask < (1L << d); ++mask) {
    Vec v(d);
    for (Index i = 0; i < d; ++i) v(i) = (mask >> i) & 1 ? 1 : -1;
    verts.push_back(std::move(v));
  }
  HPolyhedron h = HPolyhedron::empty_system(d);
  for (Index i = 0; i < d; ++i) {
    h.add_inequality(unit_vector(d, i), Rational(1));
    h.add_inequality(Vec(-unit_vector(d, i)), Rational(1));
  }
  return {canonical(verts, d), std::move(h)};
}

PolytopePair cross_polytope(Index d) {
  require_range(d, 1, 10, "cross-polytope dimension");
  std::vector<Vec> verts;
  for (Index i = 0; i < d; ++i) {
    verts.push_back(unit_vector(d, i));
    verts.push_back(-unit_vector(d, i));
  }
  HPolyhedron h = HPolyhedron::empty_system(d);
  if (d <= 6) {
    for (long mask = 0; mask < (1L << d); ++mask) {
      Vec a(d);
      for (Index i = 0; i < d; ++i) a(i) = (mask >> i) & 1 ? 1 : -1;
      h.add_inequality(a, Rational(1));
    }
  }
  return {canonical(verts, d), std::move(h)};
}

PolytopePair permutahedron(int n) {
  require_range(n, 2, 6, "permutahedron order");
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1L);
  std::vector<Vec> verts;
  do {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = perm[static_cast<std::size_t>(i)];
    verts.push_back(std::move(v));
  } while (std::next_permutation(perm.begin(), perm.end()));

  HPolyhedron h = HPolyhedron::empty_system(n);
  for (long mask = 1; mask < (1L << n) - 1; ++mask) {
    Vec a = Vec::Zero(n);
    long size = 0;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1) {
        a(i) = -1;
        ++size;
      }
    }
    h.add_inequality(a, Rational(-size * (size + 1) / 2));
  }
  h.add_equality(Vec::Ones(n), Rational(static_cast<long>(n) * (n + 1) / 2));
  return {canonical(verts, n), std::move(h)};
}

std::vector<std::pair<int, int>> batcher_comparators(int n) {
  if (n < 2 || (n & (n - 1)) != 0) throw PreconditionError("sorting network size must be a power of two >= 2");
  std::vector<std::pair<int, int>> out;
  for (int p = 1; p < n; p <<= 1) {
    for (int k = p; k >= 1; k >>= 1) {
      for (int j = k % p; j <= n - 1 - k; j += 2 * k) {
        for (int i = 0; i <= std::min(k - 1, n - j - k - 1); ++i) {
          if ((i + j) / (2 * p) == (i + j + k) / (2 * p)) out.emplace_back(i + j, i + j + k);
        }
      }
    }
  }
  return out;
}

ExtendedFormulation sorting_network_ef(int n) {
  if (n > 8) throw PreconditionError("sorting network EF supports n <= 8");
  const auto comps = batcher_comparators(n);
  const Index total = n + 2 * static_cast<Index>(comps.size());
  std::vector<Index> wire(static_cast<std::size_t>(n));
  std::iota(wire.begin(), wire.end(), Index{0});

  ExtendedFormulation ef;
  ef.lift = HPolyhedron::empty_system(total);
  Index next = n;
  for (const auto& [i, j] : comps) {
    const Index a = wire[static_cast<std::size_t>(i)];
    const Index b = wire[static_cast<std::size_t>(j)];
    const Index u = next++;
    const Index v = next++;
    Vec conserve = Vec::Zero(total);
    conserve(u) = 1;
    conserve(v) = 1;
    conserve(a) -= 1;
    conserve(b) -= 1;
    ef.lift.add_equality(conserve, Rational(0));
    for (Index src : {a, b}) {
      Vec dominate = Vec::Zero(total);
      dominate(src) = 1;
      dominate(u) = -1;
      ef.lift.add_inequality(dominate, Rational(0));
    }
    wire[static_cast<std::size_t>(i)] = u;
    wire[static_cast<std::size_t>(j)] = v;
  }
  for (int i = 0; i < n; ++i) ef.lift.add_equality(unit_vector(total, wire[static_cast<std::size_t>(i)]), Rational(n - i));
  ef.projection = Mat::Zero(n, total);
  ef.projection.leftCols(n) = Mat::Identity(n, n);
  ef.offset = Vec::Zero(n);
  return ef;
}

VPolytope matching_polytope(int n) {
  require_range(n, 2, 8, "matching polytope order");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  const auto m = static_cast<Index>(edges.size());
  std::vector<Vec> verts;
  Vec current = Vec::Zero(m);
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  // Depth-first over edges in order: include an edge iff both ends are free.
  auto recurse = [&](auto&& self, Index e) -> void {
    if (e == m) {
      verts.push_back(current);
      return;
    }
    self(self, e + 1);
    const auto [a, b] = edges[static_cast<std::size_t>(e)];
    if (!covered[static_cast<std::size_t>(a)] && !covered[static_cast<std::size_t>(b)]) {
      covered[static_cast<std::size_t>(a)] = covered[static_cast<std::size_t>(b)] = true;
      current(e) = 1;
      self(self, e + 1);
      current(e) = 0;
      covered[static_cast<std::size_t>(a)] = covered[static_cast<std::size_t>(b)] = false;
    }
  };
  recurse(recurse, 0);
  return canonical(verts, m);
}

VPolytope hypersimplex(int k, int n) {
  require_range(n, 1, 6, "hypersimplex ground set size");
  require_range(k, 1, n, "hypersimplex rank");
  std::vector<Vec> verts;
  for (long mask = 0; mask < (1L << n); ++mask) {
    if (__builtin_popcountl(static_cast<unsigned long>(mask)) != k) continue;
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = (mask >> i) & 1;
    verts.push_back(std::move(v));
  }
  return canonical(verts, n);
}

VPolytope random_vpolytope(Index d, int m, std::uint64_t seed) {
  require_range(d, 1, 4, "random polytope dimension");
  require_range(m, 1, 8, "random polytope point count");
  Rng rng(seed);
  Mat pts(m, d);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < d; ++j) pts(i, j) = uniform_int(rng, -5, 5);
  }
  return prune_to_vertices(pts);
}

MaxoutNetwork random_network(Index d, std::size_t units, std::uint64_t seed, long weight_bound, bool monotone,
                             int rank) {
  if (d < 1 || units < 1 || rank < 2) throw PreconditionError("random network needs d >= 1, units >= 1, rank >= 2");
  Rng rng(seed);
  MaxoutNetwork net = inputs_only(d);
  const long lo = monotone ? 0 : -weight_bound;
  auto draw_weights = [&] {
    Vec w(rank);
    for (int i = 0; i < rank; ++i) w(i) = uniform_int(rng, lo, weight_bound);
    return w;
  };
  std::vector<bool> has_out(static_cast<std::size_t>(d) + units, false);
  for (std::size_t u = 0; u < units; ++u) {
    Neuron unit;
    unit.id = "u" + std::to_string(u);
    unit.rank = rank;
    const std::size_t candidates = static_cast<std::size_t>(d) + u;
    for (std::size_t c = 0; c < candidates; ++c) {
      if (uniform_int(rng, 0, 1) == 1) unit.in.push_back({c, draw_weights()});
    }
    if (unit.in.empty()) {
      unit.in.push_back({static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(candidates) - 1)), draw_weights()});
    }
    for (const InArc& a : unit.in) has_out[a.from] = true;
    net.neurons.push_back(std::move(unit));
  }
  const std::size_t last = net.neurons.size() - 1;
  for (std::size_t v = static_cast<std::size_t>(d); v < last; ++v) {
    if (!has_out[v]) net.neurons[last].in.push_back({v, draw_weights()});
  }
  net.output = last;
  return net;
}

}  // namespace vexf

namespace vexf {

std::optional<Vec> random_edge_normal(const VPolytope& p, std::uint64_t seed) {
  const Index d = p.dim();
  const Index m = p.num_vertices();
  if (d < 2 || m < 2) return std::nullopt;
  if (m == 2) {
    // The segment itself is the edge; any nonzero normal to it works.
    const Vec v = p.vertex(1) - p.vertex(0);
    Index i = 0;
    while (v(i) == 0) ++i;
    const Index j = i == 0 ? 1 : 0;
    Vec c = Vec::Zero(d);
    c(i) = -v(j);
    c(j) = v(i);
    return c;
  }
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  Rng rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const auto& [iu, iw] : pairs) {
    // Variables (c_0..c_{d-1}, eps); maximize eps.
    HPolyhedron h = HPolyhedron::empty_system(d + 1);
    Vec along = Vec::Zero(d + 1);
    along.head(d) = p.vertex(iu) - p.vertex(iw);
    h.add_equality(along, Rational(0));
    for (Index z = 0; z < m; ++z) {
      if (z == iu || z == iw) continue;
      Vec a = Vec::Zero(d + 1);
      a.head(d) = p.vertex(z) - p.vertex(iu);
      a(d) = 1;
      h.add_inequality(a, Rational(0));
    }
    for (Index i = 0; i < d; ++i) {
      h.add_inequality(unit_vector(d + 1, i), Rational(1));
      h.add_inequality(Vec(-unit_vector(d + 1, i)), Rational(1));
    }
    h.add_inequality(unit_vector(d + 1, d), Rational(1));
    const LpOutcome best = solve(h, unit_vector(d + 1, d));
    if (best.optimal() && best.value > 0) return Vec(best.point.head(d));
  }
  return std::nullopt;
}

}  // namespace vexf
