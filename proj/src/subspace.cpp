#include "leibniz/subspace.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Subspace Subspace::zero(Index ambient_dim) {
  return from_rref(Mat(0, ambient_dim), ambient_dim);
}

Subspace Subspace::full(Index ambient_dim) {
  Mat id = Mat::Identity(ambient_dim, ambient_dim);
  return from_rref(std::move(id), ambient_dim);
}

Subspace Subspace::from_rref(Mat basis, Index ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span_rows(const Mat& vectors, Index ambient_dim) {
  if (vectors.rows() > 0 && vectors.cols() != ambient_dim)
    throw DimensionMismatch("span: vector length does not match ambient dimension");
  Mat r = rref<Rational>(vectors.rows() == 0 ? Mat(0, ambient_dim) : vectors);
  Index nonzero = 0;
  for (Index i = 0; i < r.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) break;  // RREF sinks zero rows to the bottom
    ++nonzero;
  }
  return from_rref(r.topRows(nonzero), ambient_dim);
}

Subspace Subspace::span(const std::vector<Vec>& vectors, Index ambient_dim) {
  Mat m(static_cast<Index>(vectors.size()), ambient_dim);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim)
      throw DimensionMismatch("span: vector length does not match ambient dimension");
    m.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return span_rows(m, ambient_dim);
}

std::vector<Index> Subspace::pivot_columns() const {
  return pivot_columns_of_rref(basis_);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("sum: ambient dimensions differ");
  Mat stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked.topRows(a.dim()) = a.basis();
  stacked.bottomRows(b.dim()) = b.basis();
  return Subspace::span_rows(stacked, a.ambient_dim());
}

Mat membership_constraints(const Subspace& s) {
  const Index n = s.ambient_dim();
  Mat r = Mat::Identity(n, n);
  const std::vector<Index> pivots = s.pivot_columns();
  // residual(v) = v - B^T (v at pivot coords); kernel of the residual is s
  for (Index coord = 0; coord < n; ++coord)
    for (size_t k = 0; k < pivots.size(); ++k)
      r(coord, pivots[k]) -= s.basis()(static_cast<Index>(k), coord);
  return r;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("intersect: ambient dimensions differ");
  const Index n = a.ambient_dim();
  Mat constraints(2 * n, n);
  constraints.topRows(n) = membership_constraints(a);
  constraints.bottomRows(n) = membership_constraints(b);
  return Subspace::from_rref(kernel_basis(constraints), n);
}

bool member(const Subspace& s, const Vec& v) {
  if (v.size() != s.ambient_dim())
    throw DimensionMismatch("member: vector length does not match ambient dimension");
  Vec residual = v;
  const std::vector<Index> pivots = s.pivot_columns();
  for (size_t k = 0; k < pivots.size(); ++k) {
    const Rational c = residual[pivots[k]];
    if (c == 0) continue;
    residual -= c * s.basis().row(static_cast<Index>(k)).transpose();
  }
  return is_zero_vec(residual);
}

bool contains(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("contains: ambient dimensions differ");
  for (Index i = 0; i < b.dim(); ++i)
    if (!member(a, b.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> coordinates_in(const Subspace& s, const Vec& v) {
  if (v.size() != s.ambient_dim())
    throw DimensionMismatch("coordinates_in: vector length does not match ambient dimension");
  const std::vector<Index> pivots = s.pivot_columns();
  Vec coords(s.dim());
  Vec residual = v;
  for (size_t k = 0; k < pivots.size(); ++k) {
    coords[static_cast<Index>(k)] = residual[pivots[k]];
    if (coords[static_cast<Index>(k)] != 0)
      residual -= coords[static_cast<Index>(k)] *
                  s.basis().row(static_cast<Index>(k)).transpose();
  }
  if (!is_zero_vec(residual)) return std::nullopt;
  return coords;
}

Subspace embed(const Subspace& s, Index offset, Index total_dim) {
  if (offset + s.ambient_dim() > total_dim)
    throw DimensionMismatch("embed: target dimension too small");
  Mat basis = Mat::Zero(s.dim(), total_dim);
  basis.block(0, offset, s.dim(), s.ambient_dim()) = s.basis();
  // shifting preserves RREF shape
  return Subspace::from_rref(std::move(basis), total_dim);
}

}  // namespace leibniz
