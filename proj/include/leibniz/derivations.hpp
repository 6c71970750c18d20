#pragma once

#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// A linear map on an algebra, acting on basis coordinates: column j holds
/// the image of e_j.
struct LinearMap {
  LeibnizAlgebra algebra;
  Mat matrix;
};

LinearMap linear_map(const LeibnizAlgebra& g, Mat matrix);
LinearMap left_multiplication_map(const LeibnizAlgebra& g, const Vec& a);
LinearMap right_multiplication_map(const LeibnizAlgebra& g, const Vec& a);

/// Checks D[x,y] = [Dx, y] + [x, Dy] on all basis pairs.
bool is_derivation(const LeibnizAlgebra& g, const LinearMap& d);
bool is_derivation(const LeibnizAlgebra& g, const Mat& d);

enum class DerivationFlavor { All, Central };

/// A canonical basis of a space of derivations, stored both as matrices and
/// as the RREF row space of their row-major vectorizations in Q^{n^2}.
struct DerivationSpace {
  LeibnizAlgebra algebra;
  DerivationFlavor flavor = DerivationFlavor::All;
  Subspace vectorized;  // subspace of Q^{n^2}

  Index dim() const { return vectorized.dim(); }
  std::vector<Mat> basis_matrices() const;
};

Mat unvectorize(const Vec& v, Index n);
Vec vectorize(const Mat& m);

/// Solution space of the derivation identity as n^3 linear equations in the
/// n^2 matrix entries.
DerivationSpace derivation_space(const LeibnizAlgebra& g);

/// Derivations whose image lies in the center Z(g).
DerivationSpace central_derivation_space(const LeibnizAlgebra& g);

/// Two-sided ideal invariant under all derivations.
bool is_characteristic(const LeibnizAlgebra& g, const AnchoredSubspace& ideal);

/// Two-sided ideal invariant under all central derivations.
bool is_central_characteristic(const LeibnizAlgebra& g,
                               const AnchoredSubspace& ideal);

/// g = I + J with I a two-sided ideal, J a subalgebra, I ∩ J = 0.
bool is_split_extension(const LeibnizAlgebra& g, const AnchoredSubspace& i,
                        const AnchoredSubspace& j);

struct SplitAction {
  Vec generator;  // a J-basis vector of g
  Mat action;     // its left multiplication restricted to I, in I's basis
};

/// For a split extension, the left multiplication of each J-basis vector
/// restricted to I. Each map is verified to be a derivation of I and the
/// collection is verified to send brackets to commutators; a failure raises
/// HomomorphismCheckFailed (a bug or an invalid input table).
std::vector<SplitAction> split_extension_action(const LeibnizAlgebra& g,
                                                const AnchoredSubspace& i,
                                                const AnchoredSubspace& j);

/// One-dimensional extension of K along a central derivation d:
/// [k + a f, k' + b f] = [k, k'] + b d(k) - a d(k'), with f the new basis
/// vector. The result is re-verified; a violation raises LeibnizViolation.
LeibnizAlgebra extend_by_central_derivation(const LeibnizAlgebra& k, const Mat& d);

}  // namespace leibniz
