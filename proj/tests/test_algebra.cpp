#include <doctest.h>

#include "test_support.hpp"

using namespace leibniz;
using namespace testsupport;

TEST_CASE("bracket: table entries and bilinearity") {
  const LeibnizAlgebra g = family_4_9();
  CHECK(g.bracket(unit(6, 2), unit(6, 3)) == unit(6, 5));  // [e3,e4] = e6
  CHECK(is_zero_vec(g.bracket(unit(6, 0), unit(6, 1))));   // unlisted pairs
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    Vec x(6), y(6);
    for (Index i = 0; i < 6; ++i) {
      x[i] = rng.small_rational();
      y[i] = rng.small_rational();
    }
    CHECK(g.bracket(Vec(2 * x), y) == Vec(2 * g.bracket(x, y)));
    CHECK(g.bracket(x, Vec(y + x)) == Vec(g.bracket(x, y) + g.bracket(x, x)));
  }
  CHECK_THROWS_AS(bracket(element(g, unit(6, 0)),
                          element(abelian_algebra(6), unit(6, 0))),
                  AmbientMismatch);
}

TEST_CASE("verify_leibniz: example tables") {
  CHECK(verify_leibniz(family_4_9(), VerifyMode::Full).ok);
  CHECK(verify_leibniz(family_4_9(), VerifyMode::SquareShortcut).ok);
  CHECK(verify_leibniz(abelian_algebra(4), VerifyMode::Full).ok);

  // perturb [e3,e3] from e5 to e4: the identity must break
  LeibnizAlgebra::Builder b(6);
  b.bracket(1, 1, 0);
  b.bracket(2, 2, 3);  // perturbed entry
  b.bracket(2, 3, 5);
  b.bracket(3, 2, 4);
  b.bracket(4, 2, 5);
  const VerifyReport bad = verify_leibniz(b.build(), VerifyMode::Full);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.counterexample.has_value());
  // exhaustive scan pins the first failing triple in lexicographic order
  CHECK((*bad.counterexample)[0] == 2);
  CHECK((*bad.counterexample)[1] == 2);
  CHECK((*bad.counterexample)[2] == 2);
}

TEST_CASE("verify_leibniz: shortcut falls back when the precheck fails") {
  // [e1,e1] = e1 violates square annihilation and the identity
  LeibnizAlgebra::Builder b(1);
  b.bracket(0, 0, 0);
  const VerifyReport report = verify_leibniz(b.build(), VerifyMode::SquareShortcut);
  CHECK(report.fell_back_to_full);
  CHECK_FALSE(report.ok);
}

TEST_CASE("squares_in_right_center") {
  CHECK(squares_in_right_center(family_4_9()));
  CHECK(squares_in_right_center(abelian_algebra(3)));
  // [e2,e1] = e1: the square of e1+e2 is e1, and [e2, e1] != 0
  LeibnizAlgebra::Builder b(2);
  b.bracket(1, 0, 0);
  CHECK_FALSE(squares_in_right_center(b.build()));
}

TEST_CASE("product_space: pinned values on the six-dimensional example") {
  const LeibnizAlgebra g = family_4_9();
  const AnchoredSubspace full = anchored_full(g);
  const AnchoredSubspace gg = product_space(full, full);
  CHECK(gg.space == span_units(6, {0, 4, 5}));
  CHECK(product_space(full, anchored_zero(g)).space.is_zero());
  CHECK(product_space(gg, gg).space.is_zero());
}

TEST_CASE("is_ideal: pinned examples") {
  const LeibnizAlgebra g = family_4_9();
  CHECK(is_ideal(g, anchored(g, span_units(6, {0, 1})), Side::TwoSided));
  CHECK_FALSE(is_ideal(g, anchored(g, span_units(6, {2})), Side::TwoSided));
  CHECK(is_ideal(g, anchored_zero(g), Side::TwoSided));
  CHECK(is_ideal(g, anchored(g, span_units(6, {2, 3, 4, 5})), Side::TwoSided));
}

TEST_CASE("ideal_closure: fixpoint values and properties") {
  const LeibnizAlgebra g = family_4_9();
  const AnchoredSubspace cl =
      ideal_closure(g, anchored(g, span_units(6, {2})), Side::TwoSided);
  CHECK(cl.space == span_units(6, {2, 4, 5}));

  const AnchoredSubspace leib = leibniz_kernel(g);
  CHECK(ideal_closure(g, leib, Side::TwoSided).space == leib.space);
  CHECK(ideal_closure(g, anchored_zero(g), Side::TwoSided).space.is_zero());

  // idempotent, monotone, and always an ideal
  Rng rng(31);
  for (const auto& g2 : corpus()) {
    const Subspace s = random_subspace(rng, g2.dim());
    const AnchoredSubspace c1 = ideal_closure(g2, anchored(g2, s), Side::TwoSided);
    CHECK(is_ideal(g2, c1, Side::TwoSided));
    CHECK(contains(c1.space, s));
    CHECK(ideal_closure(g2, c1, Side::TwoSided).space == c1.space);
  }
}

TEST_CASE("quotient: induced table of the example by its simple ideal") {
  const LeibnizAlgebra g = family_4_9();
  const QuotientResult q = quotient(g, anchored(g, span_units(6, {0, 1})));
  REQUIRE(q.algebra.dim() == 4);
  // images of e3..e6: [f1,f1]=f3, [f1,f2]=f4, [f2,f1]=f3, [f3,f1]=f4
  CHECK(q.algebra.bracket_basis(0, 0) == unit(4, 2));
  CHECK(q.algebra.bracket_basis(0, 1) == unit(4, 3));
  CHECK(q.algebra.bracket_basis(1, 0) == unit(4, 2));
  CHECK(q.algebra.bracket_basis(2, 0) == unit(4, 3));
  Index nonzero = 0;
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      if (!is_zero_vec(q.algebra.bracket_basis(i, j))) ++nonzero;
  CHECK(nonzero == 4);
  CHECK(Mat(q.projection * q.section) == Mat(Mat::Identity(4, 4)));

  CHECK(quotient(g, anchored_full(g)).algebra.dim() == 0);
  CHECK(quotient(g, anchored_zero(g)).algebra == g);
  CHECK_THROWS_AS(quotient(g, anchored(g, span_units(6, {2}))), NotAnIdeal);
}

TEST_CASE("direct_sum: block structure") {
  CHECK(direct_sum(abelian_algebra(2), abelian_algebra(3)) == abelian_algebra(5));
  const LeibnizAlgebra s = direct_sum(make_i2(), make_i2());
  CHECK(derived_series(s).dims == std::vector<Index>{4, 2, 0});
  CHECK(direct_sum(family_4_9(), abelian_algebra(0)) == family_4_9());
}

TEST_CASE("derived_series: pinned dims") {
  CHECK(derived_series(family_4_9()).dims == std::vector<Index>{6, 3, 0});
  CHECK(*derived_series(family_4_9()).derived_length() == 2);
  CHECK(derived_series(make_i2()).dims == std::vector<Index>{2, 1, 0});
  CHECK(derived_series(abelian_algebra(5)).dims == std::vector<Index>{5, 0});
  const LeibnizAlgebra g = family_4_9();
  CHECK_THROWS_AS(derived_series(g, anchored(g, span_units(6, {2}))),
                  NotASubalgebra);
}

TEST_CASE("lower_central_series: pinned dims and classes") {
  const SeriesReport lc = lower_central_series(family_4_9());
  CHECK(lc.dims == std::vector<Index>{6, 3, 0});
  CHECK(*lc.nilpotency_class() == 2);
  CHECK(*lower_central_series(make_i2()).nilpotency_class() == 2);
  CHECK(*lower_central_series(abelian_algebra(3)).nilpotency_class() == 1);
  CHECK(*lower_central_series(abelian_algebra(0)).nilpotency_class() == 0);
}

TEST_CASE("leibniz_kernel: pinned values") {
  CHECK(leibniz_kernel(family_4_9()).space == span_units(6, {0, 4, 5}));
  CHECK(leibniz_kernel(make_so3()).space.is_zero());
  CHECK(leibniz_kernel(make_i2()).space == span_units(2, {0}));
}

TEST_CASE("liezation: pinned values and Lie property") {
  const LeibnizAlgebra i2lie = liezation(make_i2());
  CHECK(i2lie.dim() == 1);
  CHECK(i2lie == abelian_algebra(1));

  const LeibnizAlgebra so3 = make_so3();
  CHECK(liezation(so3) == so3);  // zero kernel: identity quotient

  const LeibnizAlgebra g49lie = liezation(family_4_9());
  CHECK(g49lie.dim() == 3);
  CHECK(g49lie == abelian_algebra(3));

  for (const auto& g : corpus()) {
    const LeibnizAlgebra lie = liezation(g);
    CHECK(verify_leibniz(lie, VerifyMode::Full).ok);
    for (Index i = 0; i < lie.dim(); ++i) {
      CHECK(is_zero_vec(lie.bracket_basis(i, i)));
      for (Index j = 0; j < lie.dim(); ++j)
        CHECK(lie.bracket_basis(i, j) == Vec(-lie.bracket_basis(j, i)));
    }
  }
}

TEST_CASE("center: pinned values") {
  const LeibnizAlgebra g = family_4_9();
  CHECK(center(g, CenterSide::Left).space == span_units(6, {0, 5}));
  CHECK(center(g, CenterSide::Right).space == span_units(6, {0, 4, 5}));
  CHECK(center(g, CenterSide::Both).space == span_units(6, {0, 5}));
}

TEST_CASE("centralizer: pinned values") {
  const LeibnizAlgebra g = family_4_9();
  CHECK(centralizer(g, anchored_full(g), anchored_zero(g)).space ==
        center(g, CenterSide::Left).space);
  CHECK(centralizer(g, anchored_zero(g), anchored_zero(g)).space ==
        Subspace::full(6));
  CHECK(centralizer(g, anchored(g, span_units(6, {2})),
                    anchored(g, span_units(6, {4, 5})))
            .space == Subspace::full(6));
}

TEST_CASE("classify: pinned verdicts") {
  const Classification c49 = classify(family_4_9());
  CHECK(c49.nilpotent);
  CHECK(*c49.nilpotency_class == 2);
  CHECK(c49.solvable);
  CHECK(*c49.derived_length == 2);
  CHECK_FALSE(c49.abelian);

  for (Index d : {6, 8, 12}) {
    const Classification ct = classify(family_4_10_truncated(d));
    CHECK(ct.solvable);
    CHECK(*ct.derived_length == 2);
  }

  const Classification ca = classify(abelian_algebra(3));
  CHECK(ca.abelian);
  CHECK(*ca.nilpotency_class == 1);
  CHECK(*ca.derived_length == 1);
}

TEST_CASE("module_splitting_complement: pinned examples") {
  const LeibnizAlgebra i2 = make_i2();
  CHECK_FALSE(
      module_splitting_complement(i2, anchored(i2, span_units(2, {0}))).has_value());

  const LeibnizAlgebra s = direct_sum(make_i2(), abelian_algebra(1));
  const auto w = module_splitting_complement(s, anchored(s, span_units(3, {2})));
  REQUIRE(w.has_value());
  CHECK(*w == span_units(3, {0, 1}));

  const LeibnizAlgebra ab2 = abelian_algebra(2);
  const auto w2 = module_splitting_complement(ab2, anchored(ab2, span_units(2, {0})));
  REQUIRE(w2.has_value());
  CHECK(*w2 == span_units(2, {1}));
}

TEST_CASE("is_simple: pinned verdicts") {
  const SimplicityVerdict vi2 = is_simple(make_i2());
  CHECK(vi2.kind == SimplicityVerdict::Kind::Simple);

  const SimplicityVerdict v49 = is_simple(family_4_9());
  CHECK(v49.kind == SimplicityVerdict::Kind::NotSimple);
  REQUIRE(v49.witness.has_value());
  CHECK(v49.witness->space == span_units(6, {0, 1}));

  const SimplicityVerdict vab = is_simple(abelian_algebra(2));
  CHECK(vab.kind == SimplicityVerdict::Kind::NotSimple);
  CHECK(vab.note == "kernel of squares is zero");

  // determinism under the default seed
  const SimplicityVerdict again = is_simple(family_4_9());
  CHECK(again.witness->space == v49.witness->space);
}

TEST_CASE("verify_subideal_chain: pinned examples") {
  const LeibnizAlgebra g = family_4_9();
  CHECK(verify_subideal_chain(
      g, {anchored(g, span_units(6, {0})), anchored(g, span_units(6, {0, 1})),
          anchored_full(g)}));
  CHECK(verify_subideal_chain(g, {anchored_full(g)}));
  CHECK_FALSE(
      verify_subideal_chain(g, {anchored(g, span_units(6, {2})), anchored_full(g)}));
}

TEST_CASE("subalgebra_table: the simple ideal of the example is the 2-dim table") {
  const LeibnizAlgebra g = family_4_9();
  const LeibnizAlgebra inner = subalgebra_table(g, anchored(g, span_units(6, {0, 1})));
  CHECK(inner == make_i2());
  CHECK_THROWS_AS(subalgebra_table(g, anchored(g, span_units(6, {2}))),
                  NotASubalgebra);
}

// ---------------------------------------------------------------------------
// Property suites
// ---------------------------------------------------------------------------

TEST_CASE("property: nested product inclusion on corpus ideal pairs") {
  // [J,[I,I]] is contained in [[J,I],I] for two-sided ideals I, J
  for (const auto& g : corpus()) {
    const auto pool = default_ideal_pool(g);
    for (const auto& i : pool) {
      for (const auto& j : pool) {
        const auto lhs = product_space(j, product_space(i, i));
        const auto rhs = product_space(product_space(j, i), i);
        CHECK(contains(rhs.space, lhs.space));
      }
    }
  }
}

TEST_CASE("property: derived terms of direct sums split blockwise") {
  Rng rng(37);
  const auto pool = random_verified_algebras(rng, 12, 4);
  for (size_t t = 0; t + 1 < pool.size(); t += 2) {
    const LeibnizAlgebra& g1 = pool[t];
    const LeibnizAlgebra& g2 = pool[t + 1];
    const LeibnizAlgebra s = direct_sum(g1, g2);
    const SeriesReport d1 = derived_series(g1);
    const SeriesReport d2 = derived_series(g2);
    const SeriesReport ds = derived_series(s);
    const auto term = [](const SeriesReport& r, Index idx) {
      const size_t i = std::min<size_t>(static_cast<size_t>(idx), r.terms.size() - 1);
      return r.terms[i].space;
    };
    for (Index k = 0; k <= 4; ++k) {
      const Subspace expected =
          sum(embed(term(d1, k), 0, s.dim()), embed(term(d2, k), g1.dim(), s.dim()));
      CHECK(term(ds, k) == expected);
    }
  }
}

TEST_CASE("property: iterated derived series composes additively") {
  // the n-th derived term of the m-th derived subalgebra equals term m+n
  Rng rng(41);
  const auto pool = random_verified_algebras(rng, 10, 4);
  for (const auto& g : pool) {
    const SeriesReport ds = derived_series(g);
    const auto term = [&](Index idx) {
      const size_t i = std::min<size_t>(static_cast<size_t>(idx), ds.terms.size() - 1);
      return ds.terms[i];
    };
    for (Index m = 0; m <= 3; ++m) {
      const SeriesReport inner = derived_series(g, term(m));
      for (Index n = 0; m + n <= 5; ++n) {
        const size_t i =
            std::min<size_t>(static_cast<size_t>(n), inner.terms.size() - 1);
        CHECK(inner.terms[i].space == term(m + n).space);
      }
    }
  }
}

TEST_CASE("property: kernel of squares sits in the right center") {
  for (const auto& g : corpus())
    CHECK(contains(center(g, CenterSide::Right).space, leibniz_kernel(g).space));
}

TEST_CASE("property: verification modes agree when the precheck holds") {
  Rng rng(43);
  int checked = 0;
  while (checked < 60) {
    const LeibnizAlgebra g = random_table(rng, 3, 3);
    if (!squares_in_right_center(g)) continue;
    ++checked;
    const VerifyReport full = verify_leibniz(g, VerifyMode::Full);
    const VerifyReport fast = verify_leibniz(g, VerifyMode::SquareShortcut);
    CHECK_FALSE(fast.fell_back_to_full);
    CHECK(full.ok == fast.ok);
    CHECK(full.counterexample.has_value() == fast.counterexample.has_value());
  }
}

TEST_CASE("property: final descending central term of nilpotent corpus algebras is central") {
  // on the chain C_1 = g, C_{k+1} = [C_k, g]: the last nonzero term lies in
  // both centers
  for (const auto& g : corpus()) {
    if (!classify(g).nilpotent || g.dim() == 0) continue;
    AnchoredSubspace cur = anchored_full(g);
    AnchoredSubspace last = cur;
    while (cur.dim() > 0) {
      last = cur;
      const AnchoredSubspace next = product_space(cur, anchored_full(g));
      if (next.space == cur.space) break;
      cur = next;
    }
    CHECK(contains(center(g, CenterSide::Both).space, last.space));
  }
}

TEST_CASE("property: quotient projection intertwines brackets") {
  Rng rng(47);
  for (const auto& g : corpus()) {
    if (g.dim() == 0) continue;
    for (const auto& ideal : default_ideal_pool(g)) {
      const QuotientResult q = quotient(g, ideal);
      CHECK(q.algebra.dim() == g.dim() - ideal.dim());
      CHECK(Mat(q.projection * q.section) ==
            Mat(Mat::Identity(q.algebra.dim(), q.algebra.dim())));
      for (int t = 0; t < 4; ++t) {
        Vec x(g.dim()), y(g.dim());
        for (Index c = 0; c < g.dim(); ++c) {
          x[c] = rng.small_rational();
          y[c] = rng.small_rational();
        }
        const Vec lhs = q.projection * g.bracket(x, y);
        const Vec rhs =
            q.algebra.bracket(Vec(q.projection * x), Vec(q.projection * y));
        CHECK(lhs == rhs);
      }
    }
  }
}
