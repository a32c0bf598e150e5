#include "vexf/lex_lp.hpp"

#include <string>

#include "vexf/errors.hpp"
#include "vexf/linalg.hpp"

namespace vexf {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "OPTIMAL";
    case LpStatus::Infeasible:
      return "INFEASIBLE";
    case LpStatus::Unbounded:
      return "UNBOUNDED";
  }
  return "UNKNOWN";
}

LexObjective::LexObjective(std::vector<Vec> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw PreconditionError("lexicographic objective needs at least one vector");
  const Index d = vectors_.front().size();
  for (const Vec& v : vectors_) {
    if (v.size() != d) throw DimensionError("lexicographic objective vectors differ in length");
  }
  if (static_cast<Index>(vectors_.size()) != d || exact_rank(stack_rows(vectors_, d)) != d) {
    throw PreconditionError("lexicographic objective is not a basis");
  }
}

namespace {

LinearProgram<Rational> program_of(const HPolyhedron& h) {
  LinearProgram<Rational> lp;
  lp.ineq_lhs = h.ineq_lhs;
  lp.ineq_rhs = h.ineq_rhs;
  lp.eq_lhs = h.eq_lhs;
  lp.eq_rhs = h.eq_rhs;
  return lp;
}

void append_equality(LinearProgram<Rational>& lp, const Vec& a, const Rational& b) {
  const Index r = lp.eq_lhs.rows();
  lp.eq_lhs.conservativeResize(r + 1, a.size());
  lp.eq_rhs.conservativeResize(r + 1);
  lp.eq_lhs.row(r) = a.transpose();
  lp.eq_rhs(r) = b;
}

LpOutcome run(const LinearProgram<Rational>& lp, const ExtendedFormulation* ef, const Rational& shift) {
  auto sol = simplex_maximize(lp);
  LpOutcome out;
  out.status = sol.status;
  if (sol.status != LpStatus::Optimal) return out;
  out.value = sol.value + shift;
  out.point = std::move(sol.point);
  out.projected = ef != nullptr ? ef->project(out.point) : out.point;
  return out;
}

/// Lift-space objective and constant for c·(M y + o).
std::pair<Vec, Rational> pull_back(const ExtendedFormulation& ef, const Vec& c) {
  if (c.size() != ef.target_dim()) throw DimensionError("objective length does not match target dimension");
  return {ef.projection.transpose() * c, c.dot(ef.offset)};
}

LpOutcome solve_lex_impl(LinearProgram<Rational> lp, const ExtendedFormulation* ef, const LexObjective& lex) {
  LpOutcome last;
  for (Index i = 0; i < lex.dim(); ++i) {
    Vec obj;
    Rational shift = 0;
    if (ef != nullptr) {
      std::tie(obj, shift) = pull_back(*ef, lex[i]);
    } else {
      obj = lex[i];
    }
    lp.objective = obj;
    last = run(lp, ef, shift);
    if (!last.optimal()) return last;
    append_equality(lp, obj, last.value - shift);
  }
  // Report the first objective's value, which is what callers optimize.
  last.value = lex[0].dot(last.projected);
  return last;
}

}  // namespace

LpOutcome solve(const HPolyhedron& h, const Vec& c) {
  if (c.size() != h.dim) throw DimensionError("objective length does not match dimension");
  auto lp = program_of(h);
  lp.objective = c;
  return run(lp, nullptr, Rational(0));
}

LpOutcome solve(const ExtendedFormulation& ef, const Vec& c) {
  auto lp = program_of(ef.lift);
  Rational shift;
  std::tie(lp.objective, shift) = pull_back(ef, c);
  return run(lp, &ef, shift);
}

LexObjective complete_basis(const Vec& c) {
  if (c.isZero()) throw PreconditionError("cannot complete the zero vector to a basis");
  const Index d = c.size();
  std::vector<Vec> vectors{c};
  for (Index i = 0; i < d && static_cast<Index>(vectors.size()) < d; ++i) {
    vectors.push_back(unit_vector(d, i));
    if (exact_rank(stack_rows(vectors, d)) != static_cast<Index>(vectors.size())) vectors.pop_back();
  }
  return LexObjective(std::move(vectors));
}

LpOutcome solve_lex(const HPolyhedron& h, const LexObjective& lex) {
  if (lex.dim() != h.dim) throw DimensionError("lexicographic objective does not match dimension");
  return solve_lex_impl(program_of(h), nullptr, lex);
}

LpOutcome solve_lex(const ExtendedFormulation& ef, const LexObjective& lex) {
  if (lex.dim() != ef.target_dim()) throw DimensionError("lexicographic objective does not match target dimension");
  return solve_lex_impl(program_of(ef.lift), &ef, lex);
}

VirtualOptimum virtual_optimize(const ExtendedFormulation& ef_q, const ExtendedFormulation& ef_r, const Vec& c) {
  if (ef_q.target_dim() != ef_r.target_dim() || c.size() != ef_r.target_dim()) {
    throw DimensionError("virtual formulation dimensions disagree");
  }
  const LexObjective lex = complete_basis(c);
  const LpOutcome q = solve_lex(ef_q, lex);
  const LpOutcome r = solve_lex(ef_r, lex);
  if (!q.optimal()) throw GeometryError(std::string("LP over Q is ") + to_string(q.status));
  if (!r.optimal()) throw GeometryError(std::string("LP over R is ") + to_string(r.status));
  VirtualOptimum out;
  out.x_q = q.projected;
  out.x_r = r.projected;
  out.x = out.x_r - out.x_q;
  out.value = c.dot(out.x);
  return out;
}

}  // namespace vexf
