#include "vexf/polytopes.hpp"

#include <algorithm>
#include <string>

#include "vexf/errors.hpp"
#include "vexf/lex_lp.hpp"
#include "vexf/linalg.hpp"

namespace vexf {

namespace {

void require_same_dim(const VPolytope& p, const VPolytope& q) {
  if (p.dim() != q.dim()) throw DimensionError("polytopes live in different dimensions");
}

void require_nonempty(const VPolytope& p) {
  if (p.num_vertices() == 0) throw PreconditionError("polytope has no vertices");
}

/// Is x a convex combination of the given rows, skipping row `skip`?
bool in_hull_of_rows(const Mat& points, const Vec& x, Index skip) {
  const Index d = points.cols();
  std::vector<Index> cols;
  for (Index i = 0; i < points.rows(); ++i) {
    if (i != skip) cols.push_back(i);
  }
  if (cols.empty()) return false;
  LinearProgram<Rational> lp;
  const auto n = static_cast<Index>(cols.size());
  lp.ineq_lhs = Mat(0, n);
  lp.ineq_rhs = Vec(0);
  lp.eq_lhs = Mat::Zero(d + 1, n);
  lp.eq_rhs = Vec(d + 1);
  for (Index j = 0; j < n; ++j) {
    lp.eq_lhs.col(j).head(d) = points.row(cols[static_cast<std::size_t>(j)]).transpose();
    lp.eq_lhs(d, j) = 1;
  }
  lp.eq_rhs.head(d) = x;
  lp.eq_rhs(d) = 1;
  lp.objective = Vec::Zero(n);
  lp.nonnegative.assign(static_cast<std::size_t>(n), true);
  return simplex_maximize(lp).status == LpStatus::Optimal;
}

/// Deterministic probe directions: coordinate axes, the all-ones vector and a
/// few fixed integer directions in general position.
std::vector<Vec> probe_directions(Index d) {
  std::vector<Vec> dirs;
  for (Index i = 0; i < d; ++i) {
    dirs.push_back(unit_vector(d, i));
    dirs.push_back(-unit_vector(d, i));
  }
  dirs.push_back(Vec::Ones(d));
  dirs.push_back(-Vec::Ones(d));
  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  for (int k = 0; k < 8; ++k) {
    Vec c(d);
    for (Index i = 0; i < d; ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      c(i) = static_cast<long>((state >> 33) % 97) - 48;
    }
    dirs.push_back(std::move(c));
  }
  return dirs;
}

Support support_of_rows(const Mat& rows, const Vec& c) {
  Support s;
  s.argmax.direction = c;
  const Vec values = rows * c;
  s.value = values.maxCoeff();
  for (Index i = 0; i < values.size(); ++i) {
    if (values(i) == s.value) s.argmax.parent_indices.push_back(i);
  }
  s.argmax.vertices.resize(static_cast<Index>(s.argmax.parent_indices.size()), rows.cols());
  for (Index k = 0; k < s.argmax.vertices.rows(); ++k) {
    s.argmax.vertices.row(k) = rows.row(s.argmax.parent_indices[static_cast<std::size_t>(k)]);
  }
  return s;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::uint64_t{1} << 62)) return r;
  }
  return r;
}

}  // namespace

Support support(const VPolytope& p, const Vec& c) {
  require_nonempty(p);
  if (c.size() != p.dim()) throw DimensionError("direction length does not match dimension");
  return support_of_rows(p.vertices, c);
}

VPolytope prune_to_vertices(const Mat& points) {
  if (points.rows() == 0) throw PreconditionError("cannot prune an empty point set");
  Mat pts = sorted_unique_rows(points);
  const Index m = pts.rows();
  if (m <= 2) return VPolytope{std::move(pts)};

  // Certain vertices: the lexicographically largest maximizer in any
  // direction is a vertex. Everything else is decided by an LP.
  std::vector<bool> certain(static_cast<std::size_t>(m), false);
  for (const Vec& c : probe_directions(pts.cols())) {
    const Support s = support_of_rows(pts, c);
    certain[static_cast<std::size_t>(s.argmax.parent_indices.back())] = true;
  }
  std::vector<bool> keep(static_cast<std::size_t>(m), true);
  for (Index i = 0; i < m; ++i) {
    if (certain[static_cast<std::size_t>(i)]) continue;
    std::vector<Vec> others;
    for (Index j = 0; j < m; ++j) {
      if (j != i && keep[static_cast<std::size_t>(j)]) others.emplace_back(pts.row(j).transpose());
    }
    // Dropping a redundant point leaves the hull unchanged, so later tests
    // may use the reduced set.
    if (in_hull_of_rows(stack_rows(others, pts.cols()), pts.row(i).transpose(), -1)) {
      keep[static_cast<std::size_t>(i)] = false;
    }
  }
  std::vector<Vec> kept;
  for (Index i = 0; i < m; ++i) {
    if (keep[static_cast<std::size_t>(i)]) kept.emplace_back(pts.row(i).transpose());
  }
  return VPolytope{stack_rows(kept, pts.cols())};
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  require_same_dim(p, q);
  require_nonempty(p);
  require_nonempty(q);
  Mat sums(p.num_vertices() * q.num_vertices(), p.dim());
  for (Index i = 0; i < p.num_vertices(); ++i) {
    for (Index j = 0; j < q.num_vertices(); ++j) {
      sums.row(i * q.num_vertices() + j) = p.vertices.row(i) + q.vertices.row(j);
    }
  }
  return prune_to_vertices(sums);
}

VPolytope dilate(const VPolytope& p, const Rational& lambda) {
  require_nonempty(p);
  if (lambda < 0) throw PreconditionError("dilation factor must be nonnegative");
  if (lambda == 0) return VPolytope{Mat::Zero(1, p.dim())};
  return VPolytope{p.vertices * lambda};
}

VPolytope convex_union(const VPolytope& p, const VPolytope& q) {
  require_same_dim(p, q);
  Mat all(p.num_vertices() + q.num_vertices(), p.dim());
  all << p.vertices, q.vertices;
  return prune_to_vertices(all);
}

bool contains(const VPolytope& p, const Vec& x) {
  require_nonempty(p);
  if (x.size() != p.dim()) throw DimensionError("point length does not match dimension");
  for (Index i = 0; i < p.num_vertices(); ++i) {
    if (p.vertices.row(i).transpose() == x) return true;
  }
  return in_hull_of_rows(p.vertices, x, -1);
}

bool equals(const VPolytope& p, const VPolytope& q) {
  require_same_dim(p, q);
  require_nonempty(p);
  require_nonempty(q);
  if (p.vertices.rows() == q.vertices.rows() && p.vertices == q.vertices) return true;
  for (const Vec& c : probe_directions(p.dim())) {
    if ((p.vertices * c).maxCoeff() != (q.vertices * c).maxCoeff()) return false;
  }
  for (Index i = 0; i < p.num_vertices(); ++i) {
    if (!contains(q, p.vertex(i))) return false;
  }
  for (Index i = 0; i < q.num_vertices(); ++i) {
    if (!contains(p, q.vertex(i))) return false;
  }
  return true;
}

VPolytope optimal_face(const VPolytope& p, const Vec& c) { return VPolytope{support(p, c).argmax.vertices}; }

bool check_face_additivity(const VPolytope& p, const VPolytope& q, const Vec& c) {
  return equals(optimal_face(minkowski_sum(p, q), c), minkowski_sum(optimal_face(p, c), optimal_face(q, c)));
}

VPolytope vertex_enumeration(const HPolyhedron& h, std::uint64_t max_subsets) {
  const Index d = h.dim;
  for (Index i = 0; i < d; ++i) {
    for (int sign : {1, -1}) {
      const LpOutcome probe = solve(h, unit_vector(d, i) * Rational(sign));
      if (probe.status == LpStatus::Infeasible) throw GeometryError("vertex enumeration of an empty system");
      if (probe.status == LpStatus::Unbounded) throw GeometryError("vertex enumeration of an unbounded system");
    }
  }
  const Index eq_rank = h.num_equalities() > 0 ? exact_rank(h.eq_lhs) : 0;
  const Index need = d - eq_rank;
  const Index m = h.num_inequalities();
  if (need > m) throw GeometryError("too few inequalities for a vertex");
  if (binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(need)) > max_subsets) {
    throw LimitError("vertex enumeration would try C(" + std::to_string(m) + "," + std::to_string(need) +
                     ") active sets");
  }

  const Index rows = h.num_equalities() + need;
  Mat a(rows, d);
  Vec b(rows);
  a.topRows(h.num_equalities()) = h.eq_lhs;
  b.head(h.num_equalities()) = h.eq_rhs;
  std::vector<Vec> found;
  std::vector<Index> subset(static_cast<std::size_t>(need));
  for (Index i = 0; i < need; ++i) subset[static_cast<std::size_t>(i)] = i;
  while (true) {
    for (Index k = 0; k < need; ++k) {
      a.row(h.num_equalities() + k) = h.ineq_lhs.row(subset[static_cast<std::size_t>(k)]);
      b(h.num_equalities() + k) = h.ineq_rhs(subset[static_cast<std::size_t>(k)]);
    }
    if (auto x = solve_unique(a, b); x && h.satisfied_by(*x)) found.push_back(std::move(*x));
    // Next subset in lexicographic order.
    Index k = need - 1;
    while (k >= 0 && subset[static_cast<std::size_t>(k)] == m - need + k) --k;
    if (k < 0) break;
    ++subset[static_cast<std::size_t>(k)];
    for (Index j = k + 1; j < need; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (found.empty()) throw GeometryError("bounded system without vertices");
  // Basic feasible solutions are vertices; only duplicates need removing.
  return VPolytope{sorted_unique_rows(stack_rows(found, d))};
}

VPolytope erode(const HPolyhedron& r, const VPolytope& p) {
  require_nonempty(p);
  if (r.dim != p.dim()) throw DimensionError("erosion operands live in different dimensions");
  HPolyhedron shrunk = HPolyhedron::empty_system(r.dim);
  for (Index i = 0; i < r.num_inequalities(); ++i) {
    const Vec a = r.ineq_lhs.row(i).transpose();
    shrunk.add_inequality(a, r.ineq_rhs(i) - support(p, a).value);
  }
  for (Index i = 0; i < r.num_equalities(); ++i) {
    const Vec a = r.eq_lhs.row(i).transpose();
    const Rational up = support(p, a).value;
    const Rational down = support(p, Vec(-a)).value;
    if (up == -down) {
      shrunk.add_equality(a, r.eq_rhs(i) - up);
    } else {
      shrunk.add_inequality(a, r.eq_rhs(i) - up);
      shrunk.add_inequality(-a, -r.eq_rhs(i) - down);
    }
  }
  try {
    return vertex_enumeration(shrunk);
  } catch (const GeometryError& e) {
    throw GeometryError(std::string("eroded system: ") + e.what());
  }
}

VPolytope newton_polytope(const MaxoutNetwork& net) {
  require_valid(net);
  if (!is_monotone(net)) throw PreconditionError("newton_polytope requires a monotone network");
  const VPolytope origin{Mat::Zero(1, net.d)};
  std::vector<VPolytope> newt(net.neurons.size());
  for (std::size_t v : topological_order(net)) {
    const Neuron& nv = net.neurons[v];
    if (nv.is_input()) {
      newt[v] = VPolytope{unit_vector(net.d, static_cast<Index>(nv.coord)).transpose()};
      continue;
    }
    std::vector<Vec> row_points;
    for (int i = 0; i < nv.rank; ++i) {
      VPolytope acc = origin;
      for (const InArc& a : nv.in) {
        if (a.weights(i) == 0) continue;
        acc = minkowski_sum(acc, dilate(newt[a.from], a.weights(i)));
      }
      for (Index k = 0; k < acc.num_vertices(); ++k) row_points.push_back(acc.vertex(k));
    }
    newt[v] = prune_to_vertices(stack_rows(row_points, net.d));
  }
  return newt[net.output];
}

}  // namespace vexf
