#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// A finite-dimensional bracket algebra over Q given by structure constants:
/// row (i*n + j) of the table holds the coordinates of [e_i, e_j]. Unlisted
/// products are zero. Values are immutable after construction; copies share
/// storage.
///
/// Convention used throughout: brackets are expected to satisfy the identity
/// [[x,y],z] = [[x,z],y] + [x,[y,z]], i.e. every right multiplication
/// operator is a derivation. verify_leibniz checks exactly this.
class LeibnizAlgebra {
 public:
  class Builder {
   public:
    explicit Builder(Index dim, std::string name = "");
    /// Set [e_i, e_j] (0-based indices) to the given coordinate vector.
    Builder& bracket(Index i, Index j, const Vec& value);
    /// Convenience: set [e_i, e_j] = c * e_k.
    Builder& bracket(Index i, Index j, Index k, const Rational& c = 1);
    LeibnizAlgebra build() const;

   private:
    Index dim_;
    std::string name_;
    Mat table_;
  };

  LeibnizAlgebra() : LeibnizAlgebra(Builder(0).build()) {}

  Index dim() const { return data_->dim; }
  const std::string& name() const { return data_->name; }
  const Mat& table() const { return data_->table; }
  bool verified() const { return data_->verified; }

  /// Coordinates of [e_i, e_j].
  Vec bracket_basis(Index i, Index j) const {
    return data_->table.row(i * data_->dim + j).transpose();
  }

  /// Coordinate k of [e_i, e_j], without materializing the vector.
  const Rational& bracket_coord(Index i, Index j, Index k) const {
    return data_->table(i * data_->dim + j, k);
  }

  /// Bilinear expansion of [x, y]; skips zero coefficients.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of x |-> [a, x] acting on coordinates.
  Mat left_multiplication(const Vec& a) const;
  /// Matrix of x |-> [x, a].
  Mat right_multiplication(const Vec& a) const;

  /// Copy of this value carrying the verified flag (set by factories after a
  /// successful identity check).
  LeibnizAlgebra marked_verified() const;
  LeibnizAlgebra renamed(std::string name) const;

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.data_ == b.data_ ||
           (a.data_->dim == b.data_->dim &&
            (a.data_->dim == 0 || a.data_->table == b.data_->table));
  }
  friend bool operator!=(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return !(a == b);
  }

 private:
  struct Data {
    Index dim;
    Mat table;  // (dim*dim) x dim
    std::string name;
    bool verified;
  };
  explicit LeibnizAlgebra(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// All-zero brackets.
LeibnizAlgebra abelian_algebra(Index n, std::string name = "");

struct AlgebraElement {
  LeibnizAlgebra algebra;
  Vec coords;
};

AlgebraElement element(const LeibnizAlgebra& g, const Vec& coords);
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// A subspace tagged with its ambient algebra (ideals, centers, series terms).
struct AnchoredSubspace {
  LeibnizAlgebra algebra;
  Subspace space;

  Index dim() const { return space.dim(); }
  friend bool operator==(const AnchoredSubspace& a, const AnchoredSubspace& b) {
    return a.algebra == b.algebra && a.space == b.space;
  }
};

AnchoredSubspace anchored(const LeibnizAlgebra& g, const Subspace& s);
AnchoredSubspace anchored_zero(const LeibnizAlgebra& g);
AnchoredSubspace anchored_full(const LeibnizAlgebra& g);

void require_common_ambient(const AnchoredSubspace& a, const AnchoredSubspace& b);
void require_anchored_in(const LeibnizAlgebra& g, const AnchoredSubspace& s);

// ---------------------------------------------------------------------------
// Identity verification
// ---------------------------------------------------------------------------

enum class VerifyMode {
  Full,            // all n^3 basis triples
  SquareShortcut,  // precheck square annihilation, then triples with j <= k
};

struct VerifyReport {
  bool ok = false;
  /// First failing basis triple (i, j, k), 0-based, when not ok.
  std::optional<std::array<Index, 3>> counterexample;
  bool shortcut_requested = false;
  /// Shortcut was requested but its precondition failed; the full scan ran.
  bool fell_back_to_full = false;
};

/// Checks [[e_i,e_j],e_k] == [[e_i,e_k],e_j] + [e_i,[e_j,e_k]].
/// In SquareShortcut mode, first tests squares_in_right_center; when it holds,
/// triples (i,j,k) and (i,k,j) are equivalent and only j <= k is scanned.
VerifyReport verify_leibniz(const LeibnizAlgebra& g,
                            VerifyMode mode = VerifyMode::Full);

/// True iff [x, s] = 0 for every square s = [v,v] and every x, tested on
/// basis vectors and pairwise sums (polarization is valid over Q).
bool squares_in_right_center(const LeibnizAlgebra& g);

// ---------------------------------------------------------------------------
// Subspace calculus
// ---------------------------------------------------------------------------

/// Span of [a, b] over basis pairs of A and B.
AnchoredSubspace product_space(const AnchoredSubspace& a, const AnchoredSubspace& b);

enum class Side { Left, Right, TwoSided };

/// Left ideal: [S, g] contained in S. Right ideal: [g, S] contained in S.
bool is_ideal(const LeibnizAlgebra& g, const AnchoredSubspace& s, Side side);

/// Least fixed point of S |-> S + [S,g] (+ [g,S] as the side demands).
AnchoredSubspace ideal_closure(const LeibnizAlgebra& g, const AnchoredSubspace& s,
                               Side side);

struct QuotientResult {
  LeibnizAlgebra algebra;
  Mat projection;  // q x n
  Mat section;     // n x q, projection * section = identity
};

/// Quotient by a two-sided ideal; the complement is the set of non-pivot
/// coordinates of the ideal's RREF basis.
QuotientResult quotient(const LeibnizAlgebra& g, const AnchoredSubspace& ideal);

/// Block-diagonal structure constants on the concatenated basis.
LeibnizAlgebra direct_sum(const LeibnizAlgebra& g1, const LeibnizAlgebra& g2);

// ---------------------------------------------------------------------------
// Series, kernel, centers
// ---------------------------------------------------------------------------

enum class SeriesKind { Derived, LowerCentral };

struct SeriesReport {
  SeriesKind kind;
  std::vector<AnchoredSubspace> terms;  // terms[0] is the starting space
  std::vector<Index> dims;
  bool stabilized = false;
  /// First index with a zero term, when the series reaches zero.
  std::optional<Index> first_zero_index;

  /// Derived length (first zero index) or nilpotency class (last nonzero
  /// 1-based series position), depending on kind.
  std::optional<Index> derived_length() const;
  std::optional<Index> nilpotency_class() const;
};

/// terms[k] = k-th derived term, stopping at the first repetition. With
/// `within`, starts from that subspace instead of g (it must be closed under
/// the bracket; otherwise NotASubalgebra).
SeriesReport derived_series(const LeibnizAlgebra& g,
                            const std::optional<AnchoredSubspace>& within = {});

/// terms[k] = [g, terms[k-1]], starting at g.
SeriesReport lower_central_series(const LeibnizAlgebra& g);

/// Span of all squares [x, x] (a two-sided ideal).
AnchoredSubspace leibniz_kernel(const LeibnizAlgebra& g);

/// Quotient by the kernel of squares; the result has an antisymmetric table.
LeibnizAlgebra liezation(const LeibnizAlgebra& g);

enum class CenterSide { Left, Right, Both };

/// Left: {x : [x, y] = 0 for all y}. Right: {x : [y, x] = 0 for all y}.
AnchoredSubspace center(const LeibnizAlgebra& g, CenterSide side);

/// {a : [a, b] in N for every b in M}.
AnchoredSubspace centralizer(const LeibnizAlgebra& g, const AnchoredSubspace& m,
                             const AnchoredSubspace& n);

struct Classification {
  bool abelian = false;
  bool nilpotent = false;
  std::optional<Index> nilpotency_class;
  bool solvable = false;
  std::optional<Index> derived_length;
};

Classification classify(const LeibnizAlgebra& g);

// ---------------------------------------------------------------------------
// Simplicity
// ---------------------------------------------------------------------------

/// Seeks a complement W with g = I + W, I ∩ W = 0, and W invariant under all
/// left and right multiplications (a linear feasibility problem over the
/// sections of the quotient map). Returns the complement or nothing.
std::optional<Subspace> module_splitting_complement(const LeibnizAlgebra& g,
                                                    const AnchoredSubspace& ideal);

struct SimplicityVerdict {
  enum class Kind { Simple, NotSimple, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// A proper nonzero two-sided ideal distinct from the kernel of squares,
  /// or the degenerate kernel itself when that is the defect.
  std::optional<AnchoredSubspace> witness;
  std::string note;
};

/// Three-valued classifier: the algebra is simple iff its kernel of squares
/// is the only nontrivial two-sided ideal. Sound verdicts only; the seed
/// drives the bounded randomized irreducibility test.
SimplicityVerdict is_simple(const LeibnizAlgebra& g, std::uint64_t seed = 0);

/// True iff each term is a two-sided ideal of the next (bracket restricted)
/// and the last term is g itself.
bool verify_subideal_chain(const LeibnizAlgebra& g,
                           const std::vector<AnchoredSubspace>& chain);

/// The induced algebra on a bracket-closed subspace, in the coordinates of
/// its RREF basis. Throws NotASubalgebra if S is not closed.
LeibnizAlgebra subalgebra_table(const LeibnizAlgebra& g, const AnchoredSubspace& s);

}  // namespace leibniz
