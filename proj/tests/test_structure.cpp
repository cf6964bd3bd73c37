#include <doctest.h>

#include "homnlie/structure.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace homnlie;
namespace ts = homnlie::testsupport;

namespace {

Subspace e24() { return Subspace::span(4, {unit_vector(4, 2), unit_vector(4, 4)}); }

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("abelian algebra collapses immediately") {
  auto z = ts::zero3();
  Subspace whole = Subspace::full(3);
  auto d = derived_series(z, whole);
  auto c = central_series(z, whole);
  CHECK(d.terms[1].dim() == 0);
  CHECK(c.terms[1].dim() == 0);
  CHECK(solvability_class(z) == 1);
  CHECK(nilpotency_class(z) == 1);
}

TEST_CASE("series of the first example and its induced algebra") {
  auto a1 = ts::example1(1, 2, 0, 3);
  Subspace whole = Subspace::full(4);

  auto d = derived_series(a1, whole);
  CHECK(d.terms[1] == e24());
  CHECK(d.terms[2].dim() == 0);
  CHECK(d.class_index == 2);

  auto c = central_series(a1, whole);
  CHECK(c.stabilized);
  CHECK_FALSE(c.class_index.has_value());
  for (std::size_t r = 1; r < c.terms.size(); ++r) CHECK(c.terms[r] == e24());

  HomNLieAlgebra ind = induce_multiplicative(a1, ts::tau1());
  auto dt = derived_series(ind, whole);
  CHECK(dt.terms[1] == e24());
  CHECK(dt.terms[2].dim() == 0);  // D^2(A_tau) = 0
  auto ct = central_series(ind, whole, 6);
  for (std::size_t r = 1; r < ct.terms.size(); ++r) CHECK(ct.terms[r] == e24());
  CHECK_FALSE(nilpotency_class(ind).has_value());
}

TEST_CASE("series of the second example") {
  auto a2 = ts::example2(2, 1, 0, 5, -1);
  Subspace whole = Subspace::full(4);
  Subspace e4 = Subspace::span(4, {unit_vector(4, 4)});

  auto d = derived_series(a2, whole);
  CHECK(d.terms[1] == e4);
  CHECK(d.class_index == 2);
  CHECK(nilpotency_class(a2) == 2);

  HomNLieAlgebra ind = induce_multiplicative(a2, ts::tau2(2));
  auto dt = derived_series(ind, whole);
  CHECK(dt.terms[1] == e4);  // equals the base derived ideal
  CHECK(dt.class_index == 2);
  CHECK(nilpotency_class(ind) == 2);
}

TEST_CASE("series preconditions and invariants") {
  auto a1 = ts::example1(1, 2, 0, 3);
  CHECK_THROWS_AS(derived_series(a1, Subspace::span(4, {unit_vector(4, 1)})),
                  std::invalid_argument);

  // terms are subalgebras, and ideals when alpha is surjective
  for (const auto& alg :
       {ts::example1(1, 2, 0, 3), ts::example2(2, 1, 0, 5, -1), ts::b3()}) {
    bool surjective = image_and_rank(alg.alpha()).second == static_cast<std::size_t>(alg.dim());
    Subspace whole = Subspace::full(alg.dim());
    for (auto kind : {SeriesKind::derived, SeriesKind::central}) {
      SeriesReport rep = kind == SeriesKind::derived ? derived_series(alg, whole)
                                                     : central_series(alg, whole);
      for (const auto& term : rep.terms) {
        CHECK(is_subalgebra(alg, term));
        if (surjective) CHECK(is_ideal(alg, term));
      }
    }
  }
}

TEST_CASE("derived series refines the central series") {
  for (const auto& alg : {ts::example1(1, 2, 0, 3), ts::example2(2, 1, 0, 5, -1), ts::b3(),
                          ts::spanning3()}) {
    Subspace whole = Subspace::full(alg.dim());
    auto d = derived_series(alg, whole);
    auto c = central_series(alg, whole);
    std::size_t depth = std::min(d.terms.size(), c.terms.size());
    for (std::size_t r = 0; r < depth; ++r) CHECK(c.terms[r].includes(d.terms[r]));
    // stabilization within dim + 1 steps
    CHECK(d.terms.size() <= static_cast<std::size_t>(alg.dim()) + 3);
    CHECK(d.stabilized);
    CHECK(c.stabilized);
  }
}

TEST_CASE("centers computed and cross-checked by brute force") {
  auto zero = ts::zero3();
  CHECK(center(zero) == Subspace::full(3));

  auto a1 = ts::example1(1, 2, 0, 3);
  Subspace z1 = center(a1);
  CHECK(z1.dim() == 0);

  auto a2 = ts::example2(2, 1, 0, 5, -1);
  Subspace z2 = center(a2);
  CHECK(z2 == Subspace::span(4, {unit_vector(4, 3), unit_vector(4, 4)}));

  // brute force: a vector is central iff all brackets with basis vectors vanish
  for (const auto& alg : {a1, a2}) {
    Subspace z = center(alg);
    for (const auto& v : z.basis())
      for (const auto& xs : increasing_tuples(alg.dim(), alg.arity() - 1)) {
        std::vector<RVector> args;
        for (int i : xs) args.push_back(unit_vector(alg.dim(), i));
        args.push_back(v);
        CHECK(alg.eval_bracket(args) == zero_vector(alg.dim()));
      }
    // and every unit vector outside the center fails some bracket
    for (int u = 1; u <= alg.dim(); ++u) {
      RVector e = unit_vector(alg.dim(), u);
      if (z.contains(e)) continue;
      bool fails = false;
      for (const auto& xs : increasing_tuples(alg.dim(), alg.arity() - 1)) {
        std::vector<RVector> args;
        for (int i : xs) args.push_back(unit_vector(alg.dim(), i));
        args.push_back(e);
        if (!is_zero_vector(alg.eval_bracket(args))) fails = true;
      }
      CHECK(fails);
    }
  }

  HomNLieAlgebra ind2 = induce_multiplicative(a2, ts::tau2(2));
  CHECK(center(ind2) == Subspace::span(4, {unit_vector(4, 4)}));
}

TEST_CASE("center is an ideal when alpha is surjective") {
  for (const auto& alg : {ts::example1(1, 2, 0, 3), ts::example2(2, 1, 0, 5, -1), ts::b3()}) {
    if (image_and_rank(alg.alpha()).second == static_cast<std::size_t>(alg.dim()))
      CHECK(is_ideal(alg, center(alg)));
  }
}

TEST_CASE("unit-like elements") {
  // zero bracket: the zero vector works
  auto z = ts::zero3();
  auto u0 = find_unit_like(z, TraceForm(unit_vector(3, 2)));
  REQUIRE(u0.has_value());
  CHECK(*u0 == zero_vector(3));

  // first example has none
  auto a1 = ts::example1(1, 2, 0, 3);
  CHECK_FALSE(find_unit_like(a1, ts::tau1()).has_value());

  // second example has one; substitute it back through every basis instance
  auto a2 = ts::example2(2, 1, 0, 5, -1);
  auto u = find_unit_like(a2, ts::tau2(2));
  REQUIRE(u.has_value());
  VectorTensor ind = induced_bracket(a2, ts::tau2(2));
  for (const auto& key : increasing_tuples(4, 2)) {
    std::vector<RVector> args{*u, unit_vector(4, key[0]), unit_vector(4, key[1])};
    std::vector<RVector> bargs{unit_vector(4, key[0]), unit_vector(4, key[1])};
    CHECK(ind.eval(args) == a2.eval_bracket(bargs));
  }

  // tau = 0 with a nonzero bracket: the left side always vanishes
  CHECK_FALSE(find_unit_like(a2, TraceForm::zero(4)).has_value());
}

TEST_CASE("structure comparison verdicts hold on both examples") {
  auto c1 = compare_structures(ts::example1(1, 2, 0, 3), ts::tau1());
  CHECK(c1.central_series_contained);
  CHECK_FALSE(c1.unit_exists);
  CHECK(c1.central_series_equal_when_unit);
  CHECK(c1.center_transfer);
  CHECK(c1.nonabelian_transfer);
  CHECK(c1.nilpotency_bound);
  CHECK(c1.all());

  auto c2 = compare_structures(ts::example2(2, 1, 0, 5, -1), ts::tau2(2));
  CHECK(c2.unit_exists);
  CHECK(c2.all());

  // zero bracket: everything is trivially an equality
  auto cz = compare_structures(ts::zero3(), TraceForm(unit_vector(3, 2)));
  CHECK(cz.all());
}

TEST_CASE("induced algebras are solvable with derived length at most 2") {
  for (auto [alg, tau] : {std::pair{ts::example1(1, 2, 0, 3), ts::tau1()},
                          std::pair{ts::example1(2, 1, 4, 7), ts::tau1()},
                          std::pair{ts::example2(2, 1, 0, 5, -1), ts::tau2(2)},
                          std::pair{ts::example2(3, 2, 1, 1, -2), ts::tau2(3)}}) {
    HomNLieAlgebra ind = induce_multiplicative(alg, tau);
    auto sc = solvability_class(ind);
    REQUIRE(sc.has_value());
    CHECK(*sc <= 2);
  }
}

}  // TEST_SUITE
