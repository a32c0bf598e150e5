#pragma once

#include <cstdint>

#include "vexf/maxout_net.hpp"
#include "vexf/polyhedron.hpp"

namespace vexf {

struct Support {
  Rational value;
  Face argmax;
};

/// f_P(c) = max over vertices of c·x, together with all maximizing vertices.
Support support(const VPolytope& p, const Vec& c);

/// Minimal V-representation of conv(points): a point is kept iff it is not in
/// the hull of the others. Output rows are in lexicographic order.
VPolytope prune_to_vertices(const Mat& points);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

/// lambda·P for lambda >= 0; lambda = 0 yields {0}.
VPolytope dilate(const VPolytope& p, const Rational& lambda);

/// conv(P ∪ Q).
VPolytope convex_union(const VPolytope& p, const VPolytope& q);

/// Exact convex-hull membership decided by an LP feasibility problem.
bool contains(const VPolytope& p, const Vec& x);

/// Mutual containment of vertex sets.
bool equals(const VPolytope& p, const VPolytope& q);

VPolytope optimal_face(const VPolytope& p, const Vec& c);

/// Face of P + Q in direction c versus the sum of the faces of P and Q.
bool check_face_additivity(const VPolytope& p, const VPolytope& q, const Vec& c);

/// Exhaustive active-set vertex enumeration. Every subset of inequalities
/// that, together with the equalities, pins down a unique point is solved and
/// the point kept if feasible. Throws GeometryError for an empty or unbounded
/// system and LimitError when more than `max_subsets` subsets would be tried.
VPolytope vertex_enumeration(const HPolyhedron& h, std::uint64_t max_subsets = 1'000'000);

/// Minkowski difference {x | a_i·x <= b_i - f_P(a_i)} of R and P, vertex
/// enumerated. When P is a summand of R the result Q satisfies P + Q = R.
/// Throws GeometryError when the eroded system is empty.
VPolytope erode(const HPolyhedron& r, const VPolytope& p);

/// Polytope whose support function is computed by a monotone network, built
/// by propagating support-function calculus through the graph. Throws
/// PreconditionError for networks with a negative weight.
VPolytope newton_polytope(const MaxoutNetwork& net);

}  // namespace vexf
