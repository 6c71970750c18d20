#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// An explicit ascending chain of two-sided ideals together with its join.
struct IdealChain {
  LeibnizAlgebra algebra;
  std::vector<AnchoredSubspace> terms;
  AnchoredSubspace join;  // sum of all terms

  size_t length() const { return terms.size(); }
};

/// Witness indices m with [g^(m), join] contained in terms[m] (left) and
/// [join, g^(m)] contained in terms[m] (right); re-verified on construction.
struct ChainWitness {
  std::optional<Index> m_left;
  std::optional<Index> m_right;
};

/// Verifies ascent and the two-sided ideal property of every term and
/// computes the join. Throws NotAscending(k) / NotAnIdeal(k).
IdealChain validate_chain(const LeibnizAlgebra& g,
                          const std::vector<Subspace>& terms);

/// Least witness indices within 0..len-1; derived terms beyond the series
/// length count as zero. Absent when no index in range works.
ChainWitness quasi_noetherian_witness(const IdealChain& chain);

/// Least q with terms[q] equal to the join, if any.
std::optional<Index> stabilization_index(const IdealChain& chain);

/// [I, I] = 0 for every term.
bool chain_all_abelian(const IdealChain& chain);

/// Every term, as a subalgebra, has derived length at most k.
bool chain_all_solvable(const IdealChain& chain, Index k);

struct MaximalProducts {
  std::vector<Subspace> left_family;   // inclusion-maximal among {[H, I]}
  std::vector<Subspace> right_family;  // inclusion-maximal among {[I, H]}
};

/// Both product families over a finite pool of ideals, reduced to their
/// inclusion-maximal elements.
MaximalProducts maximal_products(const LeibnizAlgebra& g,
                                 const AnchoredSubspace& ideal,
                                 const std::vector<AnchoredSubspace>& pool);

using AlgebraPredicate = std::function<bool(const LeibnizAlgebra&)>;

/// First pool member H with predX(H as algebra) and predY(g / H), if any.
std::optional<AnchoredSubspace> x_by_y_witness(
    const LeibnizAlgebra& g, const AlgebraPredicate& pred_x,
    const AlgebraPredicate& pred_y, const std::vector<AnchoredSubspace>& pool);

/// Deterministic pool of two-sided ideals: series terms, centers, the kernel
/// of squares, and closures of basis vectors; deduplicated, order preserved.
std::vector<AnchoredSubspace> default_ideal_pool(const LeibnizAlgebra& g);

AlgebraPredicate pred_abelian();
AlgebraPredicate pred_nilpotent();
AlgebraPredicate pred_solvable();
AlgebraPredicate pred_solvable_k(Index k);
AlgebraPredicate pred_simple(std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Bundled example families
// ---------------------------------------------------------------------------

/// Six-dimensional verified algebra with
/// [e2,e2]=e1, [e3,e3]=e5, [e3,e4]=e6, [e4,e3]=e5, [e5,e3]=e6.
LeibnizAlgebra family_4_9();

/// d-dimensional truncation of the shift family
/// [e2,e2]=e1, [e_i,e3]=e_{i+1} for 4 <= i < d, [e_d,e3]=0.
/// Requires d >= 6 (BadDimension otherwise); the result is verified.
LeibnizAlgebra family_4_10_truncated(Index d);

}  // namespace leibniz
