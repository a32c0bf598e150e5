#pragma once

#include "vexf/lex_lp.hpp"
#include "vexf/maxout_net.hpp"
#include "vexf/monotone_split.hpp"
#include "vexf/polyhedron.hpp"

namespace vexf {

/// Extended formulation of epi(f) for a monotone network f. Lift variables are
/// ordered (x_0..x_{d-1}, t, y_v for the hidden units in topological order);
/// the projection keeps (x, t). One inequality y_v >= w^i·y per unit and row,
/// so size() is the total rank. Throws PreconditionError when not monotone.
ExtendedFormulation epigraph_ef(const MaxoutNetwork& net);

/// min{t : (x, t) in the projection} for an epigraph formulation whose last
/// target coordinate is t. Throws GeometryError when the LP is not optimal.
Rational epigraph_min(const ExtendedFormulation& epi, const Vec& x);

/// {(c, t) | x·c - t <= 0 for every vertex x of P}, the polar description of
/// epi(f_P) in (c, t)-space.
HPolyhedron epi_cone_from_vertices(const VPolytope& p);

/// Lift = disjoint union of both lifts, projection = sum of both projections.
ExtendedFormulation ef_minkowski_sum(const ExtendedFormulation& p, const ExtendedFormulation& q);

/// Identity projection of an inequality system.
ExtendedFormulation ef_trivial(const HPolyhedron& h);

/// Convex-combination formulation y = sum lambda_i v_i, lambda >= 0,
/// sum lambda = 1; one inequality per vertex.
ExtendedFormulation ef_from_vertices(const VPolytope& p);

/// max c·π(y) over the lift. Unbounded and infeasible lifts are reported in
/// the outcome status.
LpOutcome ef_support(const ExtendedFormulation& ef, const Vec& c);

/// Whether x lies in the projection of the formulation.
bool ef_contains(const ExtendedFormulation& ef, const Vec& x);

/// Repeated membership queries against one formulation. The equality system
/// and a basis of inequality rows are reduced once; each query is then an
/// affine map of x followed by a feasibility LP in slack variables only.
class MembershipOracle {
 public:
  explicit MembershipOracle(const ExtendedFormulation& ef);
  bool contains(const Vec& x) const;

 private:
  Index target_dim_ = 0;
  Mat consistency_lin_;  // consistency_lin_ x + consistency_off_ must vanish
  Vec consistency_off_;
  Mat lhs_;              // query program: lhs_ s <= rhs_lin_ x + rhs_off_
  Mat rhs_lin_;
  Vec rhs_off_;
  bool slacks_nonnegative_ = false;
};

/// {x | exists y in P: 0 <= x <= y} from an EF of P. Lift variables are
/// (x, y, lift of P) with y tied to P's projection by equalities; size grows
/// by exactly 2|E|. Throws PreconditionError if P leaves the nonnegative
/// orthant (checked through the formulation's minimum per coordinate).
ExtendedFormulation monotone_completion(const ExtendedFormulation& ef_p);

/// Same, with the convex-combination formulation of P. Throws
/// PreconditionError for negative vertex coordinates.
ExtendedFormulation monotone_completion(const VPolytope& p);

/// Output of the difference-of-monotone-networks pipeline for a polytope P:
/// the rank-2 network of f_P, its split f_P = g - h, the Newton polytopes
/// R = Newt(g) and Q = Newt(h), and epigraph formulations of g and h.
struct VirtualCertificate {
  MaxoutNetwork net;
  SplitResult split;
  VPolytope q;
  VPolytope r;
  ExtendedFormulation ef_q;
  ExtendedFormulation ef_r;
  std::size_t s = 0;  ///< size of `net`

  Index total_size() const { return ef_q.size() + ef_r.size(); }
};

VirtualCertificate virtual_ef_certificate(const VPolytope& p);

}  // namespace vexf
