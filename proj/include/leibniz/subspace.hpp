#pragma once

#include <optional>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Canonicalized linear subspace of Q^n. The stored basis is the RREF of any
/// spanning set, with zero rows dropped, so two values describe the same
/// subspace iff they compare equal cell for cell.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);
  /// Span of the rows of `vectors` inside Q^ambient_dim.
  /// Throws DimensionMismatch if the column count differs.
  static Subspace span_rows(const Mat& vectors, Index ambient_dim);
  static Subspace span(const std::vector<Vec>& vectors, Index ambient_dim);
  /// Wraps a matrix that is already a canonical RREF basis (internal fast path).
  static Subspace from_rref(Mat basis, Index ambient_dim);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(Index i) const { return basis_.row(i).transpose(); }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const { return basis_.rows() == ambient_; }
  std::vector<Index> pivot_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() &&
           (a.basis_.size() == 0 || a.basis_ == b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  Index ambient_ = 0;
  Mat basis_{0, 0};
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// True iff b is contained in a.
bool contains(const Subspace& a, const Subspace& b);
bool member(const Subspace& s, const Vec& v);

/// n x n matrix R with kernel exactly s: R v = v - B^T (pivot coords of v).
/// Used to turn "lies in s" into linear constraints.
Mat membership_constraints(const Subspace& s);

/// Coordinates of v in the stored RREF basis, or empty if v is not a member.
std::optional<Vec> coordinates_in(const Subspace& s, const Vec& v);

/// Embed s into a larger ambient space, shifting coordinates by `offset`.
Subspace embed(const Subspace& s, Index offset, Index total_dim);

}  // namespace leibniz
