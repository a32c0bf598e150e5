#include "vexf/extended_formulation.hpp"

#include <map>
#include <string>

#include "vexf/errors.hpp"
#include "vexf/linalg.hpp"
#include "vexf/simplex.hpp"
#include "vexf/polytopes.hpp"

namespace vexf {

ExtendedFormulation epigraph_ef(const MaxoutNetwork& net) {
  require_valid(net);
  if (!is_monotone(net)) throw PreconditionError("epigraph_ef requires a monotone network");
  const Index d = net.d;
  const auto units = unit_order(net);

  std::vector<Index> var(net.neurons.size(), -1);
  for (std::size_t v = 0; v < net.neurons.size(); ++v) {
    if (net.neurons[v].is_input()) var[v] = static_cast<Index>(net.neurons[v].coord);
  }
  var[net.output] = d;
  Index next = d + 1;
  for (std::size_t v : units) {
    if (v != net.output) var[v] = next++;
  }

  ExtendedFormulation ef;
  ef.lift = HPolyhedron::empty_system(next);
  for (std::size_t v : units) {
    const Neuron& nv = net.neurons[v];
    for (int i = 0; i < nv.rank; ++i) {
      Vec a = Vec::Zero(next);
      for (const InArc& arc : nv.in) a(var[arc.from]) += arc.weights(i);
      a(var[v]) -= 1;
      ef.lift.add_inequality(a, Rational(0));
    }
  }
  ef.projection = Mat::Zero(d + 1, next);
  for (Index i = 0; i <= d; ++i) ef.projection(i, i) = 1;
  ef.offset = Vec::Zero(d + 1);
  return ef;
}

Rational epigraph_min(const ExtendedFormulation& epi, const Vec& x) {
  const Index d = epi.target_dim() - 1;
  if (x.size() != d) throw DimensionError("point length does not match epigraph dimension");
  HPolyhedron fixed = epi.lift;
  for (Index i = 0; i < d; ++i) {
    fixed.add_equality(epi.projection.row(i).transpose(), x(i) - epi.offset(i));
  }
  ExtendedFormulation query{std::move(fixed), epi.projection, epi.offset};
  const LpOutcome out = solve(query, Vec(-unit_vector(d + 1, d)));
  if (!out.optimal()) throw GeometryError(std::string("epigraph query is ") + to_string(out.status));
  return -out.value;
}

HPolyhedron epi_cone_from_vertices(const VPolytope& p) {
  if (p.num_vertices() == 0) throw PreconditionError("polytope has no vertices");
  const Index d = p.dim();
  HPolyhedron h = HPolyhedron::empty_system(d + 1);
  for (Index i = 0; i < p.num_vertices(); ++i) {
    Vec a(d + 1);
    a.head(d) = p.vertex(i);
    a(d) = -1;
    h.add_inequality(a, Rational(0));
  }
  return h;
}

ExtendedFormulation ef_minkowski_sum(const ExtendedFormulation& p, const ExtendedFormulation& q) {
  if (p.target_dim() != q.target_dim()) throw DimensionError("formulations target different dimensions");
  const Index ep = p.lift_dim();
  const Index eq = q.lift_dim();
  ExtendedFormulation out;
  out.lift = HPolyhedron::empty_system(ep + eq);
  auto append = [&](const HPolyhedron& h, Index shift) {
    for (Index i = 0; i < h.num_inequalities(); ++i) {
      Vec a = Vec::Zero(ep + eq);
      a.segment(shift, h.dim) = h.ineq_lhs.row(i).transpose();
      out.lift.add_inequality(a, h.ineq_rhs(i));
    }
    for (Index i = 0; i < h.num_equalities(); ++i) {
      Vec a = Vec::Zero(ep + eq);
      a.segment(shift, h.dim) = h.eq_lhs.row(i).transpose();
      out.lift.add_equality(a, h.eq_rhs(i));
    }
  };
  append(p.lift, 0);
  append(q.lift, ep);
  out.projection.resize(p.target_dim(), ep + eq);
  out.projection << p.projection, q.projection;
  out.offset = p.offset + q.offset;
  return out;
}

ExtendedFormulation ef_trivial(const HPolyhedron& h) {
  return ExtendedFormulation{h, Mat::Identity(h.dim, h.dim), Vec::Zero(h.dim)};
}

ExtendedFormulation ef_from_vertices(const VPolytope& p) {
  if (p.num_vertices() == 0) throw PreconditionError("polytope has no vertices");
  const Index n = p.num_vertices();
  ExtendedFormulation ef;
  ef.lift = HPolyhedron::empty_system(n);
  for (Index i = 0; i < n; ++i) ef.lift.add_inequality(Vec(-unit_vector(n, i)), Rational(0));
  ef.lift.add_equality(Vec::Ones(n), Rational(1));
  ef.projection = p.vertices.transpose();
  ef.offset = Vec::Zero(p.dim());
  return ef;
}

LpOutcome ef_support(const ExtendedFormulation& ef, const Vec& c) { return solve(ef, c); }

bool ef_contains(const ExtendedFormulation& ef, const Vec& x) {
  if (x.size() != ef.target_dim()) throw DimensionError("point length does not match target dimension");
  return MembershipOracle(ef).contains(x);
}

MembershipOracle::MembershipOracle(const ExtendedFormulation& ef) : target_dim_(ef.target_dim()) {
  const Index d = target_dim_;
  const Index w = ef.lift_dim();
  const Index me = ef.lift.eq_lhs.rows();
  const Index rows = me + d;
  if (ef.projection.rows() != d || ef.projection.cols() != w) {
    throw DimensionError("projection does not match lift");
  }

  // Reduce [E; M | I] so that T [E; M] is in row echelon form; the right
  // block is T. Equality right-hand sides are [f; x - o] = G x + g0.
  Mat aug = Mat::Zero(rows, w + rows);
  if (me > 0) aug.topLeftCorner(me, w) = ef.lift.eq_lhs;
  aug.block(me, 0, d, w) = ef.projection;
  aug.rightCols(rows) = Mat::Identity(rows, rows);
  const std::vector<Index> pivots = reduce_row_echelon(aug, w);
  const auto rank = static_cast<Index>(pivots.size());
  const Mat t = aug.rightCols(rows);
  Vec g0(rows);
  g0.head(me) = ef.lift.eq_rhs;
  g0.tail(d) = -ef.offset;
  const Mat h_lin = t.rightCols(d);  // T G
  const Vec h_off = product_skip_zeros(t, g0);
  consistency_lin_ = h_lin.bottomRows(rows - rank);
  consistency_off_ = h_off.tail(rows - rank);

  // Lift points: y = S h(x) + N z with z free.
  std::vector<bool> is_pivot(static_cast<std::size_t>(w), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index j = 0; j < w; ++j) {
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  }
  const auto nf = static_cast<Index>(free_cols.size());
  Mat null_basis = Mat::Zero(w, nf);
  Mat select = Mat::Zero(w, rows);
  for (Index k = 0; k < rank; ++k) {
    const Index p = pivots[static_cast<std::size_t>(k)];
    select(p, k) = 1;
    for (Index f = 0; f < nf; ++f) {
      const Rational& a = aug(k, free_cols[static_cast<std::size_t>(f)]);
      if (a != 0) null_basis(p, f) = -a;
    }
  }
  for (Index f = 0; f < nf; ++f) null_basis(free_cols[static_cast<std::size_t>(f)], f) = 1;

  // Inequalities in z: A N z <= b - A S h(x).
  const Mat& a = ef.lift.ineq_lhs;
  const Index m = a.rows();
  Mat a_red = m > 0 ? product_skip_zeros(a, null_basis) : Mat(0, nf);
  Mat a_select = m > 0 ? product_skip_zeros(a, select) : Mat(0, rows);
  Mat red_lin = m > 0 ? Mat(-product_skip_zeros(a_select, h_lin)) : Mat(0, d);
  Vec red_off = m > 0 ? Vec(ef.lift.ineq_rhs - product_skip_zeros(a_select, h_off)) : Vec(0);

  // Substitute z through the first nf independent rows when they exist.
  Mat a_red_t = a_red.transpose();
  const std::vector<Index> rows_b = reduce_row_echelon(a_red_t, m);
  if (m >= nf && static_cast<Index>(rows_b.size()) == nf) {
    std::vector<bool> in_b(static_cast<std::size_t>(m), false);
    for (Index r : rows_b) in_b[static_cast<std::size_t>(r)] = true;
    Mat inv_aug = Mat::Zero(nf, 2 * nf);
    for (Index k = 0; k < nf; ++k) {
      inv_aug.row(k).head(nf) = a_red.row(rows_b[static_cast<std::size_t>(k)]);
      inv_aug(k, nf + k) = 1;
    }
    reduce_row_echelon(inv_aug, nf);
    const Mat b_inv = inv_aug.rightCols(nf);
    Mat a_n(m - nf, nf);
    Mat q = Mat::Zero(m - nf, m);
    for (Index i = 0, r = 0; i < m; ++i) {
      if (in_b[static_cast<std::size_t>(i)]) continue;
      a_n.row(r) = a_red.row(i);
      q(r, i) = 1;
      ++r;
    }
    const Mat a_n_binv = product_skip_zeros(a_n, b_inv);
    for (Index k = 0; k < nf; ++k) q.col(rows_b[static_cast<std::size_t>(k)]) = -a_n_binv.col(k);
    lhs_ = -a_n_binv;
    rhs_lin_ = product_skip_zeros(q, red_lin);
    rhs_off_ = product_skip_zeros(q, red_off);
    slacks_nonnegative_ = true;
  } else {
    lhs_ = std::move(a_red);
    rhs_lin_ = std::move(red_lin);
    rhs_off_ = std::move(red_off);
    slacks_nonnegative_ = false;
  }
}

bool MembershipOracle::contains(const Vec& x) const {
  if (x.size() != target_dim_) throw DimensionError("point length does not match target dimension");
  if (consistency_lin_.rows() > 0) {
    const Vec residual = product_skip_zeros(consistency_lin_, x) + consistency_off_;
    if (!residual.isZero()) return false;
  }
  LinearProgram<Rational> lp;
  lp.ineq_rhs = product_skip_zeros(rhs_lin_, x) + rhs_off_;
  if (slacks_nonnegative_ && (lp.ineq_rhs.array() >= 0).all()) return true;
  if (lhs_.cols() == 0) return (lp.ineq_rhs.array() >= 0).all();
  lp.ineq_lhs = lhs_;
  lp.eq_lhs = Mat(0, lhs_.cols());
  lp.eq_rhs = Vec(0);
  lp.objective = Vec::Zero(lhs_.cols());
  if (slacks_nonnegative_) lp.nonnegative.assign(static_cast<std::size_t>(lhs_.cols()), true);
  return simplex_maximize(lp).status == LpStatus::Optimal;
}

ExtendedFormulation monotone_completion(const ExtendedFormulation& ef_p) {
  const Index d = ef_p.target_dim();
  for (Index i = 0; i < d; ++i) {
    const LpOutcome low = ef_support(ef_p, Vec(-unit_vector(d, i)));
    if (!low.optimal()) throw PreconditionError("formulation of P is not a nonempty polytope");
    if (-low.value < 0) throw PreconditionError("monotone completion requires P in the nonnegative orthant");
  }
  const Index w = ef_p.lift_dim();
  const Index total = 2 * d + w;  // (x, y, lift of P)
  ExtendedFormulation out;
  out.lift = HPolyhedron::empty_system(total);
  for (Index i = 0; i < ef_p.lift.num_inequalities(); ++i) {
    Vec a = Vec::Zero(total);
    a.tail(w) = ef_p.lift.ineq_lhs.row(i).transpose();
    out.lift.add_inequality(a, ef_p.lift.ineq_rhs(i));
  }
  for (Index i = 0; i < d; ++i) {
    Vec lower = Vec::Zero(total);
    lower(i) = -1;
    out.lift.add_inequality(lower, Rational(0));
    Vec upper = Vec::Zero(total);
    upper(i) = 1;
    upper(d + i) = -1;
    out.lift.add_inequality(upper, Rational(0));
  }
  for (Index i = 0; i < ef_p.lift.num_equalities(); ++i) {
    Vec a = Vec::Zero(total);
    a.tail(w) = ef_p.lift.eq_lhs.row(i).transpose();
    out.lift.add_equality(a, ef_p.lift.eq_rhs(i));
  }
  for (Index i = 0; i < d; ++i) {
    Vec tie = Vec::Zero(total);
    tie(d + i) = 1;
    tie.tail(w) = -ef_p.projection.row(i).transpose();
    out.lift.add_equality(tie, ef_p.offset(i));
  }
  out.projection = Mat::Zero(d, total);
  out.projection.leftCols(d) = Mat::Identity(d, d);
  out.offset = Vec::Zero(d);
  return out;
}

ExtendedFormulation monotone_completion(const VPolytope& p) {
  if (p.num_vertices() == 0) throw PreconditionError("polytope has no vertices");
  for (Index i = 0; i < p.num_vertices(); ++i) {
    for (Index j = 0; j < p.dim(); ++j) {
      if (p.vertices(i, j) < 0) throw PreconditionError("monotone completion requires nonnegative vertices");
    }
  }
  return monotone_completion(ef_from_vertices(p));
}

VirtualCertificate virtual_ef_certificate(const VPolytope& p) {
  VirtualCertificate cert;
  cert.net = from_vertices(p);
  cert.s = cert.net.size();
  cert.split = split(cert.net);
  cert.r = newton_polytope(cert.split.g);
  cert.q = newton_polytope(cert.split.h);
  cert.ef_r = epigraph_ef(cert.split.g);
  cert.ef_q = epigraph_ef(cert.split.h);
  return cert;
}

}  // namespace vexf
