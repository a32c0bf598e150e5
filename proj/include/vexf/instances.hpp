#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vexf/maxout_net.hpp"
#include "vexf/polyhedron.hpp"

namespace vexf {

struct PolytopePair {
  VPolytope v;
  HPolyhedron h;
};

/// [-1, 1]^d: 2^d vertices, 2d inequalities. 1 <= d <= 10.
PolytopePair cube(Index d);

/// conv{±e_i}: 2d vertices, 2^d inequalities. H is only built for d <= 6.
PolytopePair cross_polytope(Index d);

/// Regular permutahedron conv{permutations of (1, ..., n)}, 2 <= n <= 6. The
/// H-representation has one inequality per proper nonempty subset S,
/// sum_{i in S} x_i >= |S|(|S|+1)/2, plus sum x = n(n+1)/2.
PolytopePair permutahedron(int n);

/// Comparators (i, j), i < j, of Batcher's odd-even mergesort on n wires.
std::vector<std::pair<int, int>> batcher_comparators(int n);

/// Permutahedron EF from Batcher's network. Each comparator (a, b) -> (u, v)
/// becomes u + v = a + b, u >= a, u >= b, with the larger value u carried on
/// the lower wire; final wires are fixed to (n, n-1, ..., 1). Lift variables
/// are the n input wires followed by (u, v) per comparator; the projection
/// keeps the inputs. n must be a power of two, at most 8.
ExtendedFormulation sorting_network_ef(int n);

/// Incidence vectors of all matchings of K_n (the empty matching included),
/// edges ordered (0,1), (0,2), ..., (n-2,n-1). 2 <= n <= 8.
VPolytope matching_polytope(int n);

/// 0/1 vectors with exactly k ones. 1 <= k <= n <= 6.
VPolytope hypersimplex(int k, int n);

/// Vertices of m seeded integer points in [-5, 5]^d. d <= 4, 1 <= m <= 8.
VPolytope random_vpolytope(Index d, int m, std::uint64_t seed);

/// Seeded random DAG network with `units` rank-`rank` units over d inputs and
/// integer weights in [-weight_bound, weight_bound] ([0, weight_bound] when
/// `monotone`). Each unit draws its in-neighbors from the inputs and earlier
/// units; units left without out-arcs feed the last unit, the output.
MaxoutNetwork random_network(Index d, std::size_t units, std::uint64_t seed, long weight_bound = 3,
                             bool monotone = false, int rank = 2);

}  // namespace vexf

namespace vexf {

/// A nonzero direction whose optimal face on `p` is exactly the edge [u, w]
/// for some pair of vertices, found by trying pairs in a seeded order and
/// solving max eps s.t. c·(u-w) = 0, c·(u-z) >= eps for the other vertices z,
/// c in [-1, 1]^d. Returns nullopt when p has no edge (a point) or d = 1.
std::optional<Vec> random_edge_normal(const VPolytope& p, std::uint64_t seed);

}  // namespace vexf
