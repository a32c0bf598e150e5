#pragma once

#include <vector>

#include "vexf/polyhedron.hpp"
#include "vexf/simplex.hpp"

namespace vexf {

/// Result of maximizing a linear objective over a polyhedron or over the
/// projection of an extended formulation.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vec point;      ///< optimal point in the lift (equals `projected` for plain systems)
  Vec projected;  ///< image of `point` in the target space

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Ordered objective vectors c_1, ..., c_d forming a basis of d-space.
class LexObjective {
 public:
  /// Throws PreconditionError unless the vectors form a basis.
  explicit LexObjective(std::vector<Vec> vectors);

  Index dim() const { return static_cast<Index>(vectors_.size()); }
  const std::vector<Vec>& vectors() const { return vectors_; }
  const Vec& operator[](Index i) const { return vectors_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Vec> vectors_;
};

LpOutcome solve(const HPolyhedron& h, const Vec& c);

/// max c·π(y) over the lift of `ef`.
LpOutcome solve(const ExtendedFormulation& ef, const Vec& c);

/// Extends c to a basis with standard unit vectors, in index order, that keep
/// the list linearly independent. Rejects the zero vector.
LexObjective complete_basis(const Vec& c);

/// Lexicographic maximum via d sequential LPs, each fixing the previous
/// optimal value with an equality. With a basis objective the projected
/// maximizer is unique, whichever lifted preimage the simplex lands on.
LpOutcome solve_lex(const HPolyhedron& h, const LexObjective& lex);
LpOutcome solve_lex(const ExtendedFormulation& ef, const LexObjective& lex);

struct VirtualOptimum {
  Vec x;  ///< x_R - x_Q
  Rational value;
  Vec x_r;
  Vec x_q;
};

/// Optimizes over P given extended formulations of Q and R with P + Q = R:
/// both are solved for the same lexicographic completion of c and the
/// difference of the maximizers is returned. The relation P + Q = R is the
/// caller's responsibility; without it the returned point has no meaning.
/// Throws PreconditionError for c = 0 and GeometryError when either LP is
/// not optimal.
VirtualOptimum virtual_optimize(const ExtendedFormulation& ef_q, const ExtendedFormulation& ef_r, const Vec& c);

}  // namespace vexf
