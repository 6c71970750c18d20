#include "leibniz/derivations.hpp"

namespace leibniz {

LinearMap linear_map(const LeibnizAlgebra& g, Mat matrix) {
  if (matrix.rows() != g.dim() || matrix.cols() != g.dim())
    throw AmbientMismatch("linear map matrix does not match algebra dimension");
  return LinearMap{g, std::move(matrix)};
}

LinearMap left_multiplication_map(const LeibnizAlgebra& g, const Vec& a) {
  return LinearMap{g, g.left_multiplication(a)};
}

LinearMap right_multiplication_map(const LeibnizAlgebra& g, const Vec& a) {
  return LinearMap{g, g.right_multiplication(a)};
}

bool is_derivation(const LeibnizAlgebra& g, const Mat& d) {
  if (d.rows() != g.dim() || d.cols() != g.dim())
    throw AmbientMismatch("derivation check: matrix does not match algebra");
  const Index n = g.dim();
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      Vec ej = Vec::Zero(n), ek = Vec::Zero(n);
      ej[j] = 1;
      ek[k] = 1;
      const Vec lhs = d * g.bracket_basis(j, k);
      const Vec rhs = g.bracket(d.col(j), ek) + g.bracket(ej, d.col(k));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_derivation(const LeibnizAlgebra& g, const LinearMap& d) {
  if (d.algebra != g)
    throw AmbientMismatch("derivation check: map anchored in another algebra");
  return is_derivation(g, d.matrix);
}

Mat unvectorize(const Vec& v, Index n) {
  Mat m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

Vec vectorize(const Mat& m) {
  const Index n = m.rows();
  Vec v(n * m.cols());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

std::vector<Mat> DerivationSpace::basis_matrices() const {
  std::vector<Mat> out;
  out.reserve(static_cast<size_t>(vectorized.dim()));
  for (Index r = 0; r < vectorized.dim(); ++r)
    out.push_back(unvectorize(vectorized.basis_vector(r), algebra.dim()));
  return out;
}

namespace {

// Rows of the derivation identity D([e_j,e_k]) = [D e_j, e_k] + [e_j, D e_k],
// one row per (pair, coordinate), unknowns D(i,m) vectorized row-major.
Mat derivation_constraints(const LeibnizAlgebra& g) {
  const Index n = g.dim();
  Mat rows = Mat::Zero(n * n * n, n * n);
  Index row = 0;
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      const Vec structural = g.bracket_basis(j, k);
      for (Index i = 0; i < n; ++i) {
        for (Index m = 0; m < n; ++m) {
          if (structural[m] != 0) rows(row, i * n + m) += structural[m];
          // [D e_j, e_k] coordinate i: sum_m D(m, j) * [e_m, e_k]_i
          const Rational& smk = g.bracket_coord(m, k, i);
          if (smk != 0) rows(row, m * n + j) -= smk;
          // [e_j, D e_k] coordinate i: sum_m D(m, k) * [e_j, e_m]_i
          const Rational& sjm = g.bracket_coord(j, m, i);
          if (sjm != 0) rows(row, m * n + k) -= sjm;
        }
        ++row;
      }
    }
  }
  return rows;
}

}  // namespace

DerivationSpace derivation_space(const LeibnizAlgebra& g) {
  const Index n = g.dim();
  const Mat basis = kernel_basis(derivation_constraints(g));
  return DerivationSpace{g, DerivationFlavor::All,
                         Subspace::from_rref(basis, n * n)};
}

DerivationSpace central_derivation_space(const LeibnizAlgebra& g) {
  const Index n = g.dim();
  const Subspace z = center(g, CenterSide::Both).space;
  const Mat residual = membership_constraints(z);
  const Mat der = derivation_constraints(g);
  // image constraints: for each column j, residual_Z(D e_j) = 0
  Mat rows = Mat::Zero(der.rows() + n * n, n * n);
  rows.topRows(der.rows()) = der;
  Index row = der.rows();
  for (Index j = 0; j < n; ++j) {
    for (Index coord = 0; coord < n; ++coord) {
      for (Index i = 0; i < n; ++i)
        if (residual(coord, i) != 0) rows(row, i * n + j) = residual(coord, i);
      ++row;
    }
  }
  return DerivationSpace{g, DerivationFlavor::Central,
                         Subspace::from_rref(kernel_basis(rows), n * n)};
}

namespace {

bool preserves(const Mat& map, const Subspace& s) {
  for (Index r = 0; r < s.dim(); ++r)
    if (!member(s, map * s.basis_vector(r))) return false;
  return true;
}

void require_two_sided_ideal(const LeibnizAlgebra& g, const AnchoredSubspace& s,
                             const char* what) {
  if (!is_ideal(g, s, Side::TwoSided)) throw NotAnIdeal(what);
}

}  // namespace

bool is_characteristic(const LeibnizAlgebra& g, const AnchoredSubspace& ideal) {
  require_anchored_in(g, ideal);
  require_two_sided_ideal(g, ideal, "characteristic check requires a two-sided ideal");
  for (const Mat& d : derivation_space(g).basis_matrices())
    if (!preserves(d, ideal.space)) return false;
  return true;
}

bool is_central_characteristic(const LeibnizAlgebra& g,
                               const AnchoredSubspace& ideal) {
  require_anchored_in(g, ideal);
  require_two_sided_ideal(
      g, ideal, "central characteristic check requires a two-sided ideal");
  for (const Mat& d : central_derivation_space(g).basis_matrices())
    if (!preserves(d, ideal.space)) return false;
  return true;
}

bool is_split_extension(const LeibnizAlgebra& g, const AnchoredSubspace& i,
                        const AnchoredSubspace& j) {
  require_anchored_in(g, i);
  require_anchored_in(g, j);
  if (!is_ideal(g, i, Side::TwoSided)) return false;
  if (!contains(j.space, product_space(j, j).space)) return false;  // subalgebra
  if (!intersect(i.space, j.space).is_zero()) return false;
  return sum(i.space, j.space).is_full();
}

std::vector<SplitAction> split_extension_action(const LeibnizAlgebra& g,
                                                const AnchoredSubspace& i,
                                                const AnchoredSubspace& j) {
  if (!is_split_extension(g, i, j))
    throw NotSplitExtension("not a split extension");
  const LeibnizAlgebra inner = subalgebra_table(g, i);
  const Index r = i.dim();

  auto restricted_left = [&](const Vec& a) {
    Mat m(r, r);
    for (Index c = 0; c < r; ++c) {
      const Vec image = g.bracket(a, i.space.basis_vector(c));
      const auto coords = coordinates_in(i.space, image);
      if (!coords)
        throw HomomorphismCheckFailed(
            "left multiplication does not preserve the ideal");
      m.col(c) = *coords;
    }
    return m;
  };

  std::vector<SplitAction> actions;
  for (Index s = 0; s < j.dim(); ++s) {
    const Vec gen = j.space.basis_vector(s);
    Mat action = restricted_left(gen);
    if (!is_derivation(inner, action))
      throw HomomorphismCheckFailed(
          "restricted left multiplication is not a derivation of the ideal");
    actions.push_back(SplitAction{gen, std::move(action)});
  }

  // brackets of generators must act as commutators of their actions
  for (Index s = 0; s < j.dim(); ++s) {
    for (Index t = 0; t < j.dim(); ++t) {
      const Vec prod = g.bracket(actions[s].generator, actions[t].generator);
      const Mat lhs = restricted_left(prod);
      const Mat rhs = actions[s].action * actions[t].action -
                      actions[t].action * actions[s].action;
      if (lhs != rhs)
        throw HomomorphismCheckFailed(
            "bracket of generators does not act as the commutator");
    }
  }
  return actions;
}

LeibnizAlgebra extend_by_central_derivation(const LeibnizAlgebra& k, const Mat& d) {
  const Index n = k.dim();
  if (d.rows() != n || d.cols() != n)
    throw AmbientMismatch("derivation matrix does not match algebra dimension");
  if (!is_derivation(k, d))
    throw NotCentralDerivation("map is not a derivation");
  const Subspace z = center(k, CenterSide::Both).space;
  for (Index j = 0; j < n; ++j)
    if (!member(z, d.col(j)))
      throw NotCentralDerivation("derivation image is not central");

  LeibnizAlgebra::Builder builder(n + 1, k.name().empty() ? "" : k.name() + "_ext");
  Vec v = Vec::Zero(n + 1);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      v.setZero();
      v.head(n) = k.bracket_basis(a, b);
      builder.bracket(a, b, v);
    }
  for (Index a = 0; a < n; ++a) {
    v.setZero();
    v.head(n) = d.col(a);  // [e_a, f] = d(e_a)
    builder.bracket(a, n, v);
    v.setZero();
    v.head(n) = -d.col(a);  // [f, e_a] = -d(e_a)
    builder.bracket(n, a, v);
  }
  LeibnizAlgebra out = builder.build();
  const VerifyReport report = verify_leibniz(out, VerifyMode::Full);
  if (!report.ok)
    throw LeibnizViolation("extension violates the bracket identity");
  return out.marked_verified();
}

}  // namespace leibniz
