#include "leibniz/chains.hpp"

#include <string>

namespace leibniz {

IdealChain validate_chain(const LeibnizAlgebra& g,
                          const std::vector<Subspace>& terms) {
  if (terms.empty()) throw Error("chain must be nonempty");
  IdealChain chain;
  chain.algebra = g;
  Subspace join = Subspace::zero(g.dim());
  for (size_t k = 0; k < terms.size(); ++k) {
    AnchoredSubspace term = anchored(g, terms[k]);
    if (k > 0 && !contains(terms[k], terms[k - 1]))
      throw NotAscending("chain term " + std::to_string(k) +
                             " does not contain its predecessor",
                         static_cast<long>(k));
    if (!is_ideal(g, term, Side::TwoSided))
      throw NotAnIdeal("chain term " + std::to_string(k) +
                           " is not a two-sided ideal",
                       static_cast<long>(k));
    join = sum(join, terms[k]);
    chain.terms.push_back(std::move(term));
  }
  chain.join = AnchoredSubspace{g, join};
  return chain;
}

ChainWitness quasi_noetherian_witness(const IdealChain& chain) {
  const LeibnizAlgebra& g = chain.algebra;
  const SeriesReport ds = derived_series(g);
  auto derived_term = [&](size_t m) -> AnchoredSubspace {
    if (m < ds.terms.size()) return ds.terms[m];
    return ds.terms.back();  // stabilized tail (zero for solvable algebras)
  };

  ChainWitness witness;
  for (size_t m = 0; m < chain.terms.size(); ++m) {
    if (!witness.m_left &&
        contains(chain.terms[m].space,
                 product_space(derived_term(m), chain.join).space))
      witness.m_left = static_cast<Index>(m);
    if (!witness.m_right &&
        contains(chain.terms[m].space,
                 product_space(chain.join, derived_term(m)).space))
      witness.m_right = static_cast<Index>(m);
    if (witness.m_left && witness.m_right) break;
  }
  return witness;
}

std::optional<Index> stabilization_index(const IdealChain& chain) {
  for (size_t q = 0; q < chain.terms.size(); ++q)
    if (chain.terms[q].space == chain.join.space) return static_cast<Index>(q);
  return std::nullopt;
}

bool chain_all_abelian(const IdealChain& chain) {
  for (const auto& term : chain.terms)
    if (product_space(term, term).dim() != 0) return false;
  return true;
}

bool chain_all_solvable(const IdealChain& chain, Index k) {
  for (const auto& term : chain.terms) {
    const SeriesReport ds = derived_series(chain.algebra, term);
    const auto len = ds.derived_length();
    if (!len || *len > k) return false;
  }
  return true;
}

MaximalProducts maximal_products(const LeibnizAlgebra& g,
                                 const AnchoredSubspace& ideal,
                                 const std::vector<AnchoredSubspace>& pool) {
  require_anchored_in(g, ideal);
  for (const auto& h : pool) {
    require_anchored_in(g, h);
    if (!is_ideal(g, h, Side::TwoSided))
      throw NotAnIdeal("pool member is not a two-sided ideal");
  }
  auto reduce = [](std::vector<Subspace> family) {
    std::vector<Subspace> maximal;
    for (size_t a = 0; a < family.size(); ++a) {
      bool dominated = false;
      for (size_t b = 0; b < family.size() && !dominated; ++b)
        if (a != b && family[a] != family[b] && contains(family[b], family[a]))
          dominated = true;
      if (dominated) continue;
      bool duplicate = false;
      for (const auto& kept : maximal)
        if (kept == family[a]) {
          duplicate = true;
          break;
        }
      if (!duplicate) maximal.push_back(family[a]);
    }
    return maximal;
  };

  std::vector<Subspace> left, right;
  for (const auto& h : pool) {
    left.push_back(product_space(h, ideal).space);
    right.push_back(product_space(ideal, h).space);
  }
  return MaximalProducts{reduce(std::move(left)), reduce(std::move(right))};
}

std::optional<AnchoredSubspace> x_by_y_witness(
    const LeibnizAlgebra& g, const AlgebraPredicate& pred_x,
    const AlgebraPredicate& pred_y, const std::vector<AnchoredSubspace>& pool) {
  for (const auto& h : pool) {
    require_anchored_in(g, h);
    if (!is_ideal(g, h, Side::TwoSided))
      throw NotAnIdeal("pool member is not a two-sided ideal");
    const LeibnizAlgebra inner = subalgebra_table(g, h);
    if (!pred_x(inner)) continue;
    if (pred_y(quotient(g, h).algebra)) return h;
  }
  return std::nullopt;
}

std::vector<AnchoredSubspace> default_ideal_pool(const LeibnizAlgebra& g) {
  std::vector<AnchoredSubspace> pool;
  auto push = [&](const AnchoredSubspace& s) {
    if (!is_ideal(g, s, Side::TwoSided)) return;
    for (const auto& seen : pool)
      if (seen.space == s.space) return;
    pool.push_back(s);
  };
  for (const auto& term : derived_series(g).terms) push(term);
  for (const auto& term : lower_central_series(g).terms) push(term);
  push(center(g, CenterSide::Left));
  push(center(g, CenterSide::Right));
  push(center(g, CenterSide::Both));
  push(leibniz_kernel(g));
  for (Index i = 0; i < g.dim(); ++i) {
    Vec v = Vec::Zero(g.dim());
    v[i] = 1;
    push(ideal_closure(g, anchored(g, Subspace::span({v}, g.dim())),
                       Side::TwoSided));
  }
  return pool;
}

AlgebraPredicate pred_abelian() {
  return [](const LeibnizAlgebra& g) { return classify(g).abelian; };
}

AlgebraPredicate pred_nilpotent() {
  return [](const LeibnizAlgebra& g) { return classify(g).nilpotent; };
}

AlgebraPredicate pred_solvable() {
  return [](const LeibnizAlgebra& g) { return classify(g).solvable; };
}

AlgebraPredicate pred_solvable_k(Index k) {
  return [k](const LeibnizAlgebra& g) {
    const auto len = classify(g).derived_length;
    return len && *len <= k;
  };
}

AlgebraPredicate pred_simple(std::uint64_t seed) {
  return [seed](const LeibnizAlgebra& g) {
    return is_simple(g, seed).kind == SimplicityVerdict::Kind::Simple;
  };
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

LeibnizAlgebra family_4_9() {
  LeibnizAlgebra::Builder builder(6, "family49");
  builder.bracket(1, 1, 0);  // [e2,e2] = e1
  builder.bracket(2, 2, 4);  // [e3,e3] = e5
  builder.bracket(2, 3, 5);  // [e3,e4] = e6
  builder.bracket(3, 2, 4);  // [e4,e3] = e5
  builder.bracket(4, 2, 5);  // [e5,e3] = e6
  LeibnizAlgebra g = builder.build();
  if (!verify_leibniz(g, VerifyMode::Full).ok)
    throw LeibnizViolation("family 4.9 table failed verification");
  return g.marked_verified();
}

LeibnizAlgebra family_4_10_truncated(Index d) {
  if (d < 6) throw BadDimension("family 4.10 truncation needs dimension >= 6");
  LeibnizAlgebra::Builder builder(d, "family410_" + std::to_string(d));
  builder.bracket(1, 1, 0);  // [e2,e2] = e1
  for (Index i = 3; i + 1 < d; ++i)
    builder.bracket(i, 2, i + 1);  // [e_{i+1}, e3] = e_{i+2}, truncated at e_d
  LeibnizAlgebra g = builder.build();
  if (!verify_leibniz(g, VerifyMode::Full).ok)
    throw LeibnizViolation("family 4.10 truncation failed verification");
  return g.marked_verified();
}

}  // namespace leibniz
