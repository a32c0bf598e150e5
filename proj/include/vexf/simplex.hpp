#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "vexf/errors.hpp"
#include "vexf/linalg.hpp"
#include "vexf/rational.hpp"

namespace vexf {

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

/// max objective·x  s.t.  ineq_lhs x <= ineq_rhs,  eq_lhs x = eq_rhs.
/// Variables are free unless flagged in `nonnegative` (empty means all free).
template <class Scalar>
struct LinearProgram {
  MatrixX<Scalar> ineq_lhs;
  VectorX<Scalar> ineq_rhs;
  MatrixX<Scalar> eq_lhs;
  VectorX<Scalar> eq_rhs;
  VectorX<Scalar> objective;
  std::vector<bool> nonnegative;

  Index num_vars() const { return objective.size(); }
};

template <class Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar value{};
  VectorX<Scalar> point;
};

namespace detail {

/// Dense two-phase primal simplex tableau with Bland's rule. Scalar must be
/// an exact ordered field; no tolerances are used anywhere.
template <class Scalar>
class Tableau {
 public:
  Tableau(MatrixX<Scalar> rows, std::vector<Index> basis)
      : t_(std::move(rows)), basis_(std::move(basis)) {}

  Index num_cols() const { return t_.cols() - 1; }
  Index num_rows() const { return t_.rows(); }
  const std::vector<Index>& basis() const { return basis_; }
  const Scalar& rhs(Index row) const { return t_(row, num_cols()); }
  const Scalar& at(Index row, Index col) const { return t_(row, col); }
  Scalar objective_value() const { return cost_(num_cols()); }

  /// Installs the objective `c` (length num_cols) as reduced costs.
  void set_objective(const VectorX<Scalar>& c) {
    cost_ = VectorX<Scalar>::Zero(t_.cols());
    for (Index j = 0; j < num_cols(); ++j) cost_(j) = -c(j);
    for (Index i = 0; i < num_rows(); ++i) {
      const Scalar& cb = c(basis_[static_cast<std::size_t>(i)]);
      if (cb == 0) continue;
      for (Index j = 0; j < t_.cols(); ++j) {
        if (t_(i, j) != 0) cost_(j) += cb * t_(i, j);
      }
    }
  }

  /// Runs Bland-rule pivots over columns [0, allowed_cols). Returns false
  /// when an improving column has no blocking row.
  bool optimize(Index allowed_cols) {
    while (true) {
      Index enter = -1;
      for (Index j = 0; j < allowed_cols; ++j) {
        if (cost_(j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Index leave = -1;
      Scalar best_ratio;
      for (Index i = 0; i < num_rows(); ++i) {
        if (t_(i, enter) <= 0) continue;
        Scalar ratio = rhs(i) / t_(i, enter);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(Index row, Index col) {
    const Scalar inv = Scalar(1) / t_(row, col);
    std::vector<Index> nz;
    for (Index j = 0; j < t_.cols(); ++j) {
      if (t_(row, j) != 0) {
        t_(row, j) *= inv;
        nz.push_back(j);
      }
    }
    for (Index i = 0; i < num_rows(); ++i) {
      if (i == row || t_(i, col) == 0) continue;
      const Scalar f = t_(i, col);
      for (Index j : nz) vexf::sub_mul(t_(i, j), f, t_(row, j));
    }
    if (cost_.size() > 0 && cost_(col) != 0) {
      const Scalar f = cost_(col);
      for (Index j : nz) vexf::sub_mul(cost_(j), f, t_(row, j));
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  void drop_row(Index row) {
    const Index last = num_rows() - 1;
    if (row != last) {
      t_.row(row).swap(t_.row(last));
      std::swap(basis_[static_cast<std::size_t>(row)], basis_[static_cast<std::size_t>(last)]);
    }
    t_.conservativeResize(last, Eigen::NoChange);
    basis_.pop_back();
  }

 private:
  MatrixX<Scalar> t_;
  std::vector<Index> basis_;
  VectorX<Scalar> cost_;
};

}  // namespace detail

namespace detail {

/// Two-phase simplex on the program as given.
template <class Scalar>
LpSolution<Scalar> simplex_core(const LinearProgram<Scalar>& lp) {
  const Index n = lp.num_vars();
  const Index m_ub = lp.ineq_lhs.rows();
  const Index m_eq = lp.eq_lhs.rows();

  // Column layout: [structural (x+ and x- for free vars) | slacks | artificials].
  std::vector<Index> pos_col(static_cast<std::size_t>(n)), neg_col(static_cast<std::size_t>(n), -1);
  Index ncols = 0;
  for (Index j = 0; j < n; ++j) {
    pos_col[static_cast<std::size_t>(j)] = ncols++;
    const bool nonneg = !lp.nonnegative.empty() && lp.nonnegative[static_cast<std::size_t>(j)];
    if (!nonneg) neg_col[static_cast<std::size_t>(j)] = ncols++;
  }
  const Index slack0 = ncols;
  ncols += m_ub;
  const Index m = m_ub + m_eq;

  std::vector<bool> needs_artificial(static_cast<std::size_t>(m), false);
  for (Index i = 0; i < m_ub; ++i) needs_artificial[static_cast<std::size_t>(i)] = lp.ineq_rhs(i) < 0;
  for (Index i = 0; i < m_eq; ++i) needs_artificial[static_cast<std::size_t>(m_ub + i)] = true;
  const Index art0 = ncols;
  for (bool b : needs_artificial) ncols += b ? 1 : 0;

  MatrixX<Scalar> rows = MatrixX<Scalar>::Zero(m, ncols + 1);
  std::vector<Index> basis(static_cast<std::size_t>(m));
  Index next_art = art0;
  for (Index i = 0; i < m; ++i) {
    const bool is_ub = i < m_ub;
    const auto lhs = is_ub ? lp.ineq_lhs.row(i) : lp.eq_lhs.row(i - m_ub);
    const Scalar& rhs = is_ub ? lp.ineq_rhs(i) : lp.eq_rhs(i - m_ub);
    const bool flip = rhs < 0;
    for (Index j = 0; j < n; ++j) {
      if (lhs(j) == 0) continue;
      Scalar a = flip ? Scalar(-lhs(j)) : lhs(j);
      if (neg_col[static_cast<std::size_t>(j)] >= 0) rows(i, neg_col[static_cast<std::size_t>(j)]) = -a;
      rows(i, pos_col[static_cast<std::size_t>(j)]) = std::move(a);
    }
    if (is_ub) rows(i, slack0 + i) = flip ? Scalar(-1) : Scalar(1);
    rows(i, ncols) = flip ? Scalar(-rhs) : rhs;
    if (needs_artificial[static_cast<std::size_t>(i)]) {
      rows(i, next_art) = 1;
      basis[static_cast<std::size_t>(i)] = next_art++;
    } else {
      basis[static_cast<std::size_t>(i)] = slack0 + i;
    }
  }

  Tableau<Scalar> tab(std::move(rows), std::move(basis));
  LpSolution<Scalar> out;

  if (art0 < ncols) {
    VectorX<Scalar> phase1 = VectorX<Scalar>::Zero(ncols);
    for (Index j = art0; j < ncols; ++j) phase1(j) = -1;
    tab.set_objective(phase1);
    [[maybe_unused]] const bool bounded = tab.optimize(ncols);
    assert(bounded);
    if (tab.objective_value() < 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (Index i = tab.num_rows() - 1; i >= 0; --i) {
      if (tab.basis()[static_cast<std::size_t>(i)] < art0) continue;
      Index col = -1;
      for (Index j = 0; j < art0; ++j) {
        if (tab.at(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.pivot(i, col);
      } else {
        tab.drop_row(i);
      }
    }
  }

  VectorX<Scalar> phase2 = VectorX<Scalar>::Zero(ncols);
  for (Index j = 0; j < n; ++j) {
    if (lp.objective(j) == 0) continue;
    phase2(pos_col[static_cast<std::size_t>(j)]) = lp.objective(j);
    if (neg_col[static_cast<std::size_t>(j)] >= 0) phase2(neg_col[static_cast<std::size_t>(j)]) = -lp.objective(j);
  }
  tab.set_objective(phase2);
  if (!tab.optimize(art0)) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  VectorX<Scalar> col_values = VectorX<Scalar>::Zero(ncols);
  for (Index i = 0; i < tab.num_rows(); ++i) col_values(tab.basis()[static_cast<std::size_t>(i)]) = tab.rhs(i);
  out.point = VectorX<Scalar>::Zero(n);
  for (Index j = 0; j < n; ++j) {
    out.point(j) = col_values(pos_col[static_cast<std::size_t>(j)]);
    if (neg_col[static_cast<std::size_t>(j)] >= 0) out.point(j) -= col_values(neg_col[static_cast<std::size_t>(j)]);
  }
  out.value = lp.objective.dot(out.point);
  out.status = LpStatus::Optimal;
  return out;
}

/// All variables free and no equalities: pick the first n linearly
/// independent rows B of A and write z = B^-1 (b_B - s) with slacks s >= 0.
/// The program becomes one in s alone, with no split columns. Returns
/// nullopt when A has a nontrivial kernel.
template <class Scalar>
std::optional<LpSolution<Scalar>> solve_by_row_basis(const LinearProgram<Scalar>& lp) {
  const Index n = lp.num_vars();
  const Index m = lp.ineq_lhs.rows();
  if (m < n) return std::nullopt;
  MatrixX<Scalar> at = lp.ineq_lhs.transpose();
  const std::vector<Index> rows_b = reduce_row_echelon(at, m);
  if (static_cast<Index>(rows_b.size()) != n) return std::nullopt;
  std::vector<bool> in_b(static_cast<std::size_t>(m), false);
  for (Index r : rows_b) in_b[static_cast<std::size_t>(r)] = true;

  MatrixX<Scalar> aug = MatrixX<Scalar>::Zero(n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    aug.row(k).head(n) = lp.ineq_lhs.row(rows_b[static_cast<std::size_t>(k)]);
    aug(k, n + k) = 1;
  }
  reduce_row_echelon(aug, n);
  const MatrixX<Scalar> b_inv = aug.rightCols(n);
  VectorX<Scalar> rhs_b(n);
  for (Index k = 0; k < n; ++k) rhs_b(k) = lp.ineq_rhs(rows_b[static_cast<std::size_t>(k)]);
  const VectorX<Scalar> z0 = product_skip_zeros(b_inv, rhs_b);

  MatrixX<Scalar> a_n(m - n, n);
  VectorX<Scalar> b_n(m - n);
  for (Index i = 0, r = 0; i < m; ++i) {
    if (in_b[static_cast<std::size_t>(i)]) continue;
    a_n.row(r) = lp.ineq_lhs.row(i);
    b_n(r) = lp.ineq_rhs(i);
    ++r;
  }
  LinearProgram<Scalar> reduced;
  reduced.ineq_lhs = -product_skip_zeros(a_n, b_inv);
  reduced.ineq_rhs = b_n - product_skip_zeros(a_n, z0);
  reduced.eq_lhs = MatrixX<Scalar>(0, n);
  reduced.eq_rhs = VectorX<Scalar>(0);
  reduced.objective = -product_skip_zeros(MatrixX<Scalar>(b_inv.transpose()), lp.objective);
  reduced.nonnegative.assign(static_cast<std::size_t>(n), true);
  const LpSolution<Scalar> inner = simplex_core(reduced);
  LpSolution<Scalar> out;
  out.status = inner.status;
  if (inner.status != LpStatus::Optimal) return out;
  out.point = z0 - product_skip_zeros(b_inv, inner.point);
  out.value = lp.objective.dot(out.point);
  return out;
}

/// Free variables with inequalities only.
template <class Scalar>
LpSolution<Scalar> solve_free(const LinearProgram<Scalar>& lp) {
  if (auto sol = solve_by_row_basis(lp)) return *std::move(sol);
  return simplex_core(lp);
}

/// All variables free: parametrize the affine hull of the equality rows as
/// x = base + basis z by exact row reduction and solve the inequality-only
/// program in z.
template <class Scalar>
LpSolution<Scalar> solve_by_elimination(const LinearProgram<Scalar>& lp) {
  const Index n = lp.num_vars();
  MatrixX<Scalar> aug(lp.eq_lhs.rows(), n + 1);
  aug.leftCols(n) = lp.eq_lhs;
  aug.col(n) = lp.eq_rhs;
  const std::vector<Index> pivots = reduce_row_echelon(aug, n);
  const auto rank = static_cast<Index>(pivots.size());
  LpSolution<Scalar> out;
  for (Index i = rank; i < aug.rows(); ++i) {
    if (aug(i, n) != 0) return out;  // inconsistent equalities
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index j = 0; j < n; ++j) {
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  }
  const auto nf = static_cast<Index>(free_cols.size());
  VectorX<Scalar> base = VectorX<Scalar>::Zero(n);
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n, nf);
  for (Index k = 0; k < rank; ++k) {
    base(pivots[static_cast<std::size_t>(k)]) = aug(k, n);
    for (Index f = 0; f < nf; ++f) {
      const Scalar& a = aug(k, free_cols[static_cast<std::size_t>(f)]);
      if (a != 0) basis(pivots[static_cast<std::size_t>(k)], f) = -a;
    }
  }
  for (Index f = 0; f < nf; ++f) basis(free_cols[static_cast<std::size_t>(f)], f) = 1;

  LinearProgram<Scalar> reduced;
  if (lp.ineq_lhs.rows() > 0) {
    reduced.ineq_lhs = product_skip_zeros(lp.ineq_lhs, basis);
    reduced.ineq_rhs = lp.ineq_rhs - product_skip_zeros(lp.ineq_lhs, base);
  } else {
    reduced.ineq_lhs = MatrixX<Scalar>(0, nf);
    reduced.ineq_rhs = VectorX<Scalar>(0);
  }
  reduced.eq_lhs = MatrixX<Scalar>(0, nf);
  reduced.eq_rhs = VectorX<Scalar>(0);
  reduced.objective = product_skip_zeros(MatrixX<Scalar>(basis.transpose()), lp.objective);
  const LpSolution<Scalar> inner = solve_free(reduced);
  out.status = inner.status;
  if (inner.status != LpStatus::Optimal) return out;
  out.point = base + product_skip_zeros(basis, inner.point);
  out.value = lp.objective.dot(out.point);
  return out;
}

}  // namespace detail

/// Exact two-phase primal simplex with Bland's anti-cycling rule.
///
/// Equality rows are handled natively, without big-M: when every variable is
/// free they are eliminated up front by exact row reduction, otherwise they
/// enter phase one with artificials. Free variables in the tableau are split
/// into a difference of two nonnegative columns. Deterministic: the same
/// program always yields the same pivot sequence and the same point.
template <class Scalar>
LpSolution<Scalar> simplex_maximize(const LinearProgram<Scalar>& lp) {
  const Index n = lp.num_vars();
  const Index m_ub = lp.ineq_lhs.rows();
  const Index m_eq = lp.eq_lhs.rows();
  if ((m_ub > 0 && lp.ineq_lhs.cols() != n) || (m_eq > 0 && lp.eq_lhs.cols() != n) ||
      lp.ineq_rhs.size() != m_ub || lp.eq_rhs.size() != m_eq ||
      (!lp.nonnegative.empty() && static_cast<Index>(lp.nonnegative.size()) != n)) {
    throw DimensionError("linear program dimensions are inconsistent");
  }
  const bool all_free = std::none_of(lp.nonnegative.begin(), lp.nonnegative.end(), [](bool b) { return b; });
  if (all_free) return m_eq > 0 ? detail::solve_by_elimination(lp) : detail::solve_free(lp);
  return detail::simplex_core(lp);
}

}  // namespace vexf
