#pragma once

#include <optional>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Reduced row echelon form over an exact field scalar. Deterministic:
/// pivots are the first nonzero entry scanning rows top-down, no magnitude
/// pivoting. The result is the unique RREF of the row space.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> rref(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  const Index rows = m.rows(), cols = m.cols();
  Index pivot_row = 0;
  for (Index c = 0; c < cols && pivot_row < rows; ++c) {
    Index found = -1;
    for (Index r = pivot_row; r < rows; ++r) {
      if (m(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) m.row(found).swap(m.row(pivot_row));
    const Scalar inv = Scalar(1) / m(pivot_row, c);
    for (Index j = c; j < cols; ++j) m(pivot_row, j) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, c) == 0) continue;
      const Scalar f = m(r, c);
      for (Index j = c; j < cols; ++j) m(r, j) -= f * m(pivot_row, j);
    }
    ++pivot_row;
  }
  return m;
}

/// Pivot columns of a matrix already in RREF, in row order.
template <typename Scalar>
std::vector<Index> pivot_columns_of_rref(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& r) {
  std::vector<Index> pivots;
  for (Index i = 0; i < r.rows(); ++i) {
    for (Index j = 0; j < r.cols(); ++j) {
      if (r(i, j) != 0) {
        pivots.push_back(j);
        break;
      }
    }
  }
  return pivots;
}

template <typename Scalar>
Index rank_of(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  return static_cast<Index>(pivot_columns_of_rref(rref(m)).size());
}

/// Canonical basis of {x : m x = 0}, returned as rows in RREF.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel_basis(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Index n = m.cols();
  M r = rref(m);
  const std::vector<Index> pivots = pivot_columns_of_rref(r);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  const Index nullity = n - static_cast<Index>(pivots.size());
  M basis = M::Zero(nullity, n);
  Index row = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    basis(row, f) = Scalar(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      basis(row, pivots[pr]) = -r(static_cast<Index>(pr), f);
    ++row;
  }
  return rref(std::move(basis));
}

template <typename Scalar>
struct AffineSolveResult {
  /// One exact solution when the system is feasible; empty means infeasible.
  std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> solution;
  /// Canonical basis (rows) of the homogeneous kernel; the full solution set
  /// is solution + span(kernel).
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel;
};

/// Solve m x = rhs exactly. The particular solution sets all free variables
/// to zero, so rerunning is bitwise reproducible.
template <typename Scalar>
AffineSolveResult<Scalar> solve_affine(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& rhs) {
  using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using V = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Index n = m.cols();
  M aug(m.rows(), n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = rhs;
  M r = rref(std::move(aug));

  AffineSolveResult<Scalar> result;
  result.kernel = kernel_basis(m);

  const std::vector<Index> pivots = pivot_columns_of_rref(r);
  for (Index p : pivots) {
    if (p == n) return result;  // pivot in the rhs column: infeasible
  }
  V x = V::Zero(n);
  for (size_t pr = 0; pr < pivots.size(); ++pr)
    x[pivots[pr]] = r(static_cast<Index>(pr), n);
  result.solution = std::move(x);
  return result;
}

}  // namespace leibniz
