#pragma once

#include <vector>

#include "vexf/rational.hpp"

namespace vexf {

/// Polytope given by its vertices; one vertex per row of `vertices`.
///
/// Invariants: at least one vertex, and no vertex lies in the convex hull of
/// the others. Operations in this library return vertices in lexicographic
/// order, so two equal polytopes produced here compare equal row by row.
struct VPolytope {
  Mat vertices;

  Index dim() const { return vertices.cols(); }
  Index num_vertices() const { return vertices.rows(); }
  Vec vertex(Index i) const { return vertices.row(i).transpose(); }
};

/// {x | ineq_lhs x <= ineq_rhs, eq_lhs x = eq_rhs}. The inequality count is
/// the reported size; the system is not required to be facet-minimal.
struct HPolyhedron {
  Index dim = 0;
  Mat ineq_lhs;
  Vec ineq_rhs;
  Mat eq_lhs;
  Vec eq_rhs;

  Index num_inequalities() const { return ineq_lhs.rows(); }
  Index num_equalities() const { return eq_lhs.rows(); }

  static HPolyhedron empty_system(Index dim) {
    return HPolyhedron{dim, Mat(0, dim), Vec(0), Mat(0, dim), Vec(0)};
  }
  void add_inequality(const Vec& a, const Rational& b);
  void add_equality(const Vec& a, const Rational& b);
  /// Exact membership by direct substitution.
  bool satisfied_by(const Vec& x) const;
};

/// A lifted polyhedron together with the affine map x = projection·y + offset
/// onto the target space. Only inequalities of the lift count toward size.
struct ExtendedFormulation {
  HPolyhedron lift;
  Mat projection;
  Vec offset;

  Index target_dim() const { return projection.rows(); }
  Index lift_dim() const { return lift.dim; }
  Index size() const { return lift.num_inequalities(); }
  Vec project(const Vec& y) const { return projection * y + offset; }
};

/// Maximizing vertices of a polytope in a direction.
struct Face {
  Vec direction;
  std::vector<Index> parent_indices;
  Mat vertices;
};

}  // namespace vexf
