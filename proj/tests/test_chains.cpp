#include <doctest.h>

#include "test_support.hpp"

using namespace leibniz;
using namespace testsupport;

namespace {

std::vector<Subspace> g49_chain() {
  return {span_units(6, {5}), span_units(6, {4, 5}), span_units(6, {0, 4, 5})};
}

std::vector<Subspace> tail_chain(Index d) {
  // terms span{e_{d-k} .. e_d} for k = 0 .. d-5
  std::vector<Subspace> terms;
  for (Index k = 0; k + 5 <= d - 1 + 1 && k <= d - 5; ++k) {
    std::vector<Vec> vecs;
    for (Index c = d - k - 1; c < d; ++c) vecs.push_back(unit(d, c));
    terms.push_back(Subspace::span(vecs, d));
  }
  return terms;
}

}  // namespace

TEST_CASE("validate_chain: pinned examples") {
  const LeibnizAlgebra g = family_4_9();
  const IdealChain chain = validate_chain(g, g49_chain());
  CHECK(chain.length() == 3);
  CHECK(chain.join.space == span_units(6, {0, 4, 5}));

  CHECK(validate_chain(g, {Subspace::full(6)}).length() == 1);

  CHECK_THROWS_AS(validate_chain(g, {span_units(6, {2}), Subspace::full(6)}),
                  NotAnIdeal);
  // descending pair: not ascending
  CHECK_THROWS_AS(validate_chain(g, {span_units(6, {0, 4, 5}), span_units(6, {5})}),
                  NotAscending);
  try {
    validate_chain(g, {span_units(6, {2}), Subspace::full(6)});
  } catch (const NotAnIdeal& e) {
    CHECK(e.term_index == 0);
  }
}

TEST_CASE("quasi_noetherian_witness: pinned values") {
  const LeibnizAlgebra g = family_4_9();
  const ChainWitness w = quasi_noetherian_witness(validate_chain(g, g49_chain()));
  REQUIRE(w.m_left.has_value());
  REQUIRE(w.m_right.has_value());
  CHECK(*w.m_left == 0);
  CHECK(*w.m_right == 0);

  for (Index d : {8, 12}) {
    const LeibnizAlgebra t = family_4_10_truncated(d);
    const ChainWitness wt = quasi_noetherian_witness(validate_chain(t, tail_chain(d)));
    REQUIRE(wt.m_left.has_value());
    REQUIRE(wt.m_right.has_value());
    CHECK(*wt.m_left == 0);
    CHECK(*wt.m_right == 1);
  }

  // at d = 6 the tail chain is short enough that both indices are zero
  const LeibnizAlgebra t6 = family_4_10_truncated(6);
  const ChainWitness w6 = quasi_noetherian_witness(validate_chain(t6, tail_chain(6)));
  CHECK(*w6.m_left == 0);
  CHECK(*w6.m_right == 0);
}

TEST_CASE("stabilization_index: pinned values") {
  const LeibnizAlgebra g = family_4_9();
  CHECK(*stabilization_index(validate_chain(g, g49_chain())) == 2);
  CHECK(*stabilization_index(validate_chain(g, {Subspace::full(6)})) == 0);
  const IdealChain constant =
      validate_chain(g, {span_units(6, {5}), span_units(6, {5})});
  CHECK(*stabilization_index(constant) == 0);
}

TEST_CASE("chain_all_abelian / chain_all_solvable: pinned values") {
  const LeibnizAlgebra g = family_4_9();
  CHECK(chain_all_abelian(validate_chain(g, g49_chain())));

  const LeibnizAlgebra s = direct_sum(make_i2(), abelian_algebra(1));
  const IdealChain inner = validate_chain(s, {span_units(3, {0, 1})});
  CHECK_FALSE(chain_all_abelian(inner));
  CHECK(chain_all_solvable(inner, 2));
  CHECK_FALSE(chain_all_solvable(inner, 1));

  const IdealChain zero = validate_chain(g, {Subspace::zero(6)});
  CHECK(chain_all_abelian(zero));
  CHECK(chain_all_solvable(zero, 1));
}

TEST_CASE("maximal_products: pinned instance") {
  const LeibnizAlgebra g = family_4_9();
  const AnchoredSubspace i = anchored(g, span_units(6, {0, 1}));
  const std::vector<AnchoredSubspace> pool = {
      anchored_zero(g), i, leibniz_kernel(g), anchored_full(g)};
  const MaximalProducts mp = maximal_products(g, i, pool);
  REQUIRE(mp.left_family.size() == 1);
  REQUIRE(mp.right_family.size() == 1);
  CHECK(mp.left_family[0] == span_units(6, {0}));
  CHECK(mp.right_family[0] == span_units(6, {0}));

  const MaximalProducts zero_pool = maximal_products(g, i, {anchored_zero(g)});
  REQUIRE(zero_pool.left_family.size() == 1);
  CHECK(zero_pool.left_family[0].is_zero());

  const MaximalProducts self = maximal_products(g, anchored_full(g), {anchored_full(g)});
  CHECK(self.left_family[0] == span_units(6, {0, 4, 5}));
  CHECK(self.right_family[0] == span_units(6, {0, 4, 5}));

  CHECK_THROWS_AS(maximal_products(g, i, {anchored(g, span_units(6, {2}))}),
                  NotAnIdeal);
}

TEST_CASE("x_by_y_witness: simple-by-solvable on the bundled families") {
  const LeibnizAlgebra g = family_4_9();
  const auto w = x_by_y_witness(g, pred_simple(), pred_solvable(),
                                default_ideal_pool(g));
  REQUIRE(w.has_value());
  CHECK(w->space == span_units(6, {0, 1}));

  const LeibnizAlgebra t8 = family_4_10_truncated(8);
  const auto w8 = x_by_y_witness(t8, pred_simple(), pred_solvable(),
                                 {anchored(t8, span_units(8, {0, 1}))});
  REQUIRE(w8.has_value());
  CHECK(w8->space == span_units(8, {0, 1}));

  // a nonabelian algebra is not abelian-by-abelian over the trivial pool
  const LeibnizAlgebra i2 = make_i2();
  CHECK_FALSE(x_by_y_witness(i2, pred_abelian(), pred_abelian(),
                             {anchored_zero(i2)})
                  .has_value());
}

TEST_CASE("family_4_9: pinned invariants") {
  const LeibnizAlgebra g = family_4_9();
  CHECK(g.dim() == 6);
  CHECK(g.verified());
  CHECK(verify_leibniz(g, VerifyMode::SquareShortcut).ok);
  CHECK(leibniz_kernel(g).space == span_units(6, {0, 4, 5}));
  CHECK(*classify(g).nilpotency_class == 2);
}

TEST_CASE("family_4_10_truncated: pinned invariants") {
  for (Index d : {6, 8}) {
    const LeibnizAlgebra t = family_4_10_truncated(d);
    CHECK(t.dim() == d);
    CHECK(t.verified());
    CHECK(is_ideal(t, anchored(t, span_units(d, {0, 1})), Side::TwoSided));
    std::vector<Vec> tail;
    for (Index c = 2; c < d; ++c) tail.push_back(unit(d, c));
    CHECK(is_ideal(t, anchored(t, Subspace::span(tail, d)), Side::TwoSided));
    const Classification cls = classify(t);
    CHECK(cls.solvable);
    CHECK(*cls.derived_length == 2);
  }
  CHECK_THROWS_AS(family_4_10_truncated(5), BadDimension);
}

// ---------------------------------------------------------------------------
// Property suites
// ---------------------------------------------------------------------------

TEST_CASE("property: witnesses exist and are bounded by the stabilization index") {
  for (const auto& g : corpus()) {
    for (const auto& terms : fixture_chains(g)) {
      const IdealChain chain = validate_chain(g, terms);
      const auto stab = stabilization_index(chain);
      REQUIRE(stab.has_value());  // finite explicit chains always stabilize
      const ChainWitness w = quasi_noetherian_witness(chain);
      REQUIRE(w.m_left.has_value());
      REQUIRE(w.m_right.has_value());
      CHECK(*w.m_left <= *stab);
      CHECK(*w.m_right <= *stab);
    }
  }
}

TEST_CASE("property: pushed-forward chains on quotients keep witnesses") {
  for (const auto& g : corpus()) {
    if (g.dim() == 0) continue;
    for (const auto& terms : fixture_chains(g)) {
      const IdealChain chain = validate_chain(g, terms);
      // quotient by the first term; push the rest forward
      const QuotientResult q = quotient(g, chain.terms.front());
      std::vector<Subspace> pushed;
      for (const auto& term : chain.terms) {
        Mat rows(term.dim(), q.algebra.dim());
        for (Index r = 0; r < term.dim(); ++r)
          rows.row(r) = (q.projection * term.space.basis_vector(r)).transpose();
        pushed.push_back(Subspace::span_rows(rows, q.algebra.dim()));
      }
      const IdealChain image = validate_chain(q.algebra, pushed);
      const ChainWitness w = quasi_noetherian_witness(image);
      CHECK(w.m_left.has_value());
      CHECK(w.m_right.has_value());
    }
  }
}

TEST_CASE("property: direct-sum chains respect the componentwise witness bound") {
  const std::vector<LeibnizAlgebra> algebras = {make_i2(), family_4_9(),
                                                family_4_10_truncated(6)};
  for (const auto& g1 : algebras) {
    for (const auto& g2 : algebras) {
      const LeibnizAlgebra s = direct_sum(g1, g2);
      const auto chains1 = fixture_chains(g1);
      const auto chains2 = fixture_chains(g2);
      for (size_t c1 = 0; c1 < chains1.size(); ++c1) {
        for (size_t c2 = 0; c2 < chains2.size(); ++c2) {
          std::vector<Subspace> t1 = chains1[c1];
          std::vector<Subspace> t2 = chains2[c2];
          const size_t len = std::max(t1.size(), t2.size());
          while (t1.size() < len) t1.push_back(t1.back());
          while (t2.size() < len) t2.push_back(t2.back());
          std::vector<Subspace> joint;
          for (size_t k = 0; k < len; ++k)
            joint.push_back(
                sum(embed(t1[k], 0, s.dim()), embed(t2[k], g1.dim(), s.dim())));
          const ChainWitness ws = quasi_noetherian_witness(validate_chain(s, joint));
          const ChainWitness w1 =
              quasi_noetherian_witness(validate_chain(g1, t1));
          const ChainWitness w2 =
              quasi_noetherian_witness(validate_chain(g2, t2));
          REQUIRE(ws.m_left.has_value());
          REQUIRE(ws.m_right.has_value());
          CHECK(*ws.m_left <= std::max(*w1.m_left, *w2.m_left));
          CHECK(*ws.m_right <= std::max(*w1.m_right, *w2.m_right));
        }
      }
    }
  }
}

TEST_CASE("property: deep derived terms of solvable ideals are abelian ideals") {
  // for an ideal J of derived length l, its term l-1 is an abelian two-sided
  // ideal of the ambient algebra
  for (const auto& g : corpus()) {
    for (const auto& j : default_ideal_pool(g)) {
      if (j.dim() == 0) continue;
      const SeriesReport ds = derived_series(g, j);
      const auto len = ds.derived_length();
      if (!len || *len == 0) continue;
      const AnchoredSubspace deep = ds.terms[static_cast<size_t>(*len - 1)];
      CHECK(product_space(deep, deep).space.is_zero());
      CHECK(is_ideal(g, deep, Side::TwoSided));
    }
  }
}
