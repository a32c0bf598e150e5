#pragma once

#include <optional>
#include <utility>

#include "vexf/rational.hpp"

namespace vexf {

/// Reduces `m` in place to reduced row echelon form using exact arithmetic
/// and returns the pivot columns. Scalar must be an exact field.
template <class Scalar>
std::vector<Index> reduce_row_echelon(MatrixX<Scalar>& m, Index pivot_cols = -1) {
  if (pivot_cols < 0) pivot_cols = m.cols();
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < pivot_cols && row < m.rows(); ++col) {
    Index sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) {
      if (m(row, j) != 0) m(row, j) *= inv;
    }
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) sub_mul(m(i, j), f, m(row, j));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Index exact_rank(MatrixX<Scalar> m) {
  return static_cast<Index>(reduce_row_echelon(m).size());
}

/// Solves a x = b when the system is consistent and a has full column rank;
/// otherwise returns nullopt. Over-determined consistent systems are fine.
template <class Scalar>
std::optional<VectorX<Scalar>> solve_unique(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto pivots = reduce_row_echelon(aug, a.cols());
  if (static_cast<Index>(pivots.size()) != a.cols()) return std::nullopt;
  for (Index i = a.cols(); i < aug.rows(); ++i) {
    if (aug(i, a.cols()) != 0) return std::nullopt;
  }
  return VectorX<Scalar>(aug.col(a.cols()).head(a.cols()));
}

/// Dense product a * b that skips zero entries of a. Exact scalars make every
/// multiplication expensive, and the constraint matrices here are mostly zero.
template <class Scalar>
MatrixX<Scalar> product_skip_zeros(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows(), b.cols());
  Scalar t;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj == 0) continue;
        t = aik * bkj;
        out(i, j) += t;
      }
    }
  }
  return out;
}

template <class Scalar>
VectorX<Scalar> product_skip_zeros(const MatrixX<Scalar>& a, const VectorX<Scalar>& x) {
  VectorX<Scalar> out = VectorX<Scalar>::Zero(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) != 0 && x(k) != 0) out(i) += a(i, k) * x(k);
    }
  }
  return out;
}

}  // namespace vexf
