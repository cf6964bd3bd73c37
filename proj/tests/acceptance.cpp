// Acceptance suite: every criterion is exact (rational arithmetic, zero
// tolerance) and prints one pass/fail line. The process exits with the
// number of failed criteria.

#include <functional>
#include <iostream>
#include <vector>

#include "homnlie/cohomology.hpp"
#include "homnlie/docio.hpp"
#include "homnlie/structure.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace homnlie;
namespace ts = homnlie::testsupport;

namespace {

int failures = 0;
std::vector<std::string> notes;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  notes.clear();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << "\n";
  for (const auto& n : notes) std::cout << "        " << n << "\n";
  if (!error.empty()) std::cout << "        exception: " << error << "\n";
  if (!ok) ++failures;
}

void note(const std::string& s) { notes.push_back(s); }

bool expect(bool cond, const std::string& what) {
  if (!cond) note("failed: " + what);
  return cond;
}

Subspace span4(std::initializer_list<RVector> vs) { return Subspace::span(4, {vs}); }

struct Corpus {
  HomNLieAlgebra a1 = ts::example1(1, 2, 0, 3);
  HomNLieAlgebra a1_alt = ts::example1(2, 1, 4, 7);
  HomNLieAlgebra a2 = ts::example2(2, 1, 0, 5, -1);
  HomNLieAlgebra a2_alt = ts::example2(3, 2, 1, 1, -2);
  HomNLieAlgebra zero = ts::zero3();
  HomNLieAlgebra spanning = ts::spanning3();
  TraceForm t1 = ts::tau1();
  TraceForm t2 = ts::tau2(2);
  TraceForm t2_alt = ts::tau2(3);
  TraceForm tz = TraceForm(unit_vector(3, 2));
  TraceForm tsp = TraceForm(unit_vector(3, 2));

  std::vector<std::pair<HomNLieAlgebra, TraceForm>> with_traces() const {
    return {{a1, t1}, {a1_alt, t1}, {a2, t2}, {a2_alt, t2_alt}, {zero, tz}, {spanning, tsp}};
  }
  std::vector<HomNLieAlgebra> all() const {
    std::vector<HomNLieAlgebra> v{a1, a1_alt, a2, a2_alt, zero, spanning};
    for (const auto& [alg, tau] : with_traces()) v.push_back(induce_multiplicative(alg, tau));
    return v;
  }
};

}  // namespace

int main() {
  Corpus c;

  criterion(1, "trace spaces of the first example (free and alpha-compatible)", [&] {
    Subspace free = solve_trace_space(c.a1, false);
    Subspace compat = solve_trace_space(c.a1, true);
    bool ok = expect(free.dim() == 2, "free trace space has dim 2");
    ok &= expect(free == span4({unit_vector(4, 1), unit_vector(4, 3)}),
                 "free basis is exactly {e1, e3} (t2 = t4 = 0)");
    ok &= expect(compat.dim() == 1, "compatible space has dim 1");
    ok &= expect(compat == span4({c.t1.coefficients}), "compatible basis is (1,0,1,0) (t1 = t3)");
    return ok;
  });

  criterion(2, "trace spaces of the second example exist exactly when e = 1-a", [&] {
    Subspace compat = solve_trace_space(c.a2, true);
    bool ok = expect(compat.dim() == 1, "compatible space has dim 1 at e = 1-a");
    ok &= expect(compat == span4({c.t2.coefficients}),
                 "basis (1,0,-1,0): t2 = 0, t4 = 0, t3 = (1-a) t1");
    HomNLieAlgebra bad = ts::example2(2, 1, 0, 5, 4);  // e != 1-a
    ok &= expect(solve_trace_space(bad, true).dim() == 0, "no compatible trace when e != 1-a");
    return ok;
  });

  criterion(3, "induced brackets match the displayed tables", [&] {
    VectorTensor i1 = induced_bracket(c.a1, c.t1);
    bool ok = expect(i1.at({1, 2, 3}) == scale(Rational(2), unit_vector(4, 4)),
                     "first example: (e1,e2,e3) -> b e4 = 2 e4");
    ok &= expect(i1.at({1, 3, 4}) == scale(Rational(3), unit_vector(4, 2)),
                 "first example: (e1,e3,e4) -> d e2 = 3 e2");
    ok &= expect(i1.entries().size() == 2, "first example: no other nonzero triples");

    VectorTensor i2 = induced_bracket(c.a2, c.t2);
    RVector table_value = scale(Rational(5), unit_vector(4, 4));  // displayed: d e4
    bool second = i2.at({1, 2, 3}) == table_value && i2.entries().size() == 1;
    if (!second) {
      note("failed: second example's displayed value d e4 = 5 e4 at (e1,e2,e3)");
      note("computed from the defining alternating sum: " + format_vector(i2.at({1, 2, 3})) +
           " = (1-a) d e4 at a=2, d=5, tau=(1,0,1-a,0)");
      note("cross-checked by twist/induce commutation; the displayed table drops the (1-a) factor");
    }
    ok &= second;
    return ok;
  });

  criterion(4, "Hom-Nambu holds for every constructed algebra; the wrong pairing fails", [&] {
    bool ok = true;
    HomNLieAlgebra base = ts::base_lie4();
    ok &= expect(hom_nambu_defect(twist(base, ts::alpha1(1, 2, 0, 3))).empty(), "twist A1");
    ok &= expect(hom_nambu_defect(twist(base, ts::alpha2(2, 1, 0, 5, -1))).empty(), "twist A2");
    for (const auto& [alg, tau] : c.with_traces())
      ok &= expect(hom_nambu_defect(induce_multiplicative(alg, tau)).empty(),
                   "induced algebra over " + alg.name());
    HomNLieAlgebra gen = induce_general(ts::b3_zero_twists(), TraceForm(unit_vector(3, 1)),
                                        RMatrix(3, 3));
    ok &= expect(hom_nambu_defect(gen).empty(), "general-theorem induction");
    ScalarTensor chi12(2, 4);
    chi12.set({1, 2}, Rational(1));
    ok &= expect(hom_nambu_defect(central_extension(c.a1, chi12, zero_vector(5)).extended).empty(),
                 "central extension");

    HomNLieAlgebra wrong("wrong", 4, 2, c.a1.bracket(), {RMatrix::identity(4)}, true);
    auto defects = hom_nambu_defect(wrong);
    bool found = false;
    for (const auto& d : defects)
      if (d.x_tuple == MultiIndex{1} && d.y_tuple == MultiIndex{2, 3} &&
          d.residual == scale(Rational(6), unit_vector(4, 2)))
        found = true;
    ok &= expect(found, "wrong pairing fails with residual d b e2 = 6 e2 at x=(1), y=(2,3)");
    return ok;
  });

  criterion(5, "every induced algebra satisfies D^2 = 0", [&] {
    bool ok = true;
    for (const auto& [alg, tau] : c.with_traces()) {
      HomNLieAlgebra ind = induce_multiplicative(alg, tau);
      auto d = derived_series(ind, Subspace::full(ind.dim()));
      ok &= expect(d.terms.size() > 2 ? d.terms[2].dim() == 0 : d.terms.back().dim() == 0,
                   "D^2 = 0 for the algebra induced over " + alg.name());
    }
    return ok;
  });

  criterion(6, "central series values and all structure-comparison verdicts", [&] {
    Subspace e24 = span4({unit_vector(4, 2), unit_vector(4, 4)});
    HomNLieAlgebra ind1 = induce_multiplicative(c.a1, c.t1);
    auto cb = central_series(c.a1, Subspace::full(4), 8);
    auto ci = central_series(ind1, Subspace::full(4), 8);
    auto term = [](const SeriesReport& s, std::size_t r) -> const Subspace& {
      return r < s.terms.size() ? s.terms[r] : s.terms.back();
    };
    bool ok = true;
    for (std::size_t r = 1; r <= 6; ++r) {
      ok &= expect(term(cb, r) == e24, "C^" + std::to_string(r) + "(A1) = span{e2,e4}");
      ok &= expect(term(ci, r) == e24, "C^" + std::to_string(r) + "(A1 induced) = span{e2,e4}");
    }
    for (auto [alg, tau] : {std::pair{c.a1, c.t1}, std::pair{c.a2, c.t2}}) {
      auto cmp = compare_structures(alg, tau);
      ok &= expect(cmp.central_series_contained, alg.name() + ": series containment (i)");
      ok &= expect(cmp.central_series_equal_when_unit, alg.name() + ": equality with unit (ii)");
      ok &= expect(cmp.center_transfer, alg.name() + ": center transfer (iii)");
      ok &= expect(cmp.nonabelian_transfer, alg.name() + ": non-abelian transfer (iv)");
      ok &= expect(cmp.nilpotency_bound, alg.name() + ": nilpotency comparison (v)");
    }
    return ok;
  });

  criterion(7, "scalar cohomology of the first example: 3 / 2 / 1 with constraints", [&] {
    auto coh = scalar_cohomology2(c.a1);
    bool ok = expect(coh.z2.dim() == 3, "dim Z2 = 3");
    ok &= expect(coh.b2.dim() == 2, "dim B2 = 2");
    ok &= expect(coh.h2_dim == 1, "dim H2 = 1");
    auto idx = [&](MultiIndex k) {
      for (std::size_t i = 0; i < coh.form_basis.size(); ++i)
        if (coh.form_basis[i] == k) return i;
      return std::size_t(99);
    };
    for (const auto& v : coh.z2.basis())
      ok &= expect(v[idx({1, 4})].is_zero() && v[idx({2, 3})].is_zero() &&
                       v[idx({2, 4})].is_zero(),
                   "cocycle constraints phi_14 = phi_23 = phi_24 = 0");
    return ok;
  });

  criterion(8, "scalar cohomology of the second example: 5 / 1 / 4 with its constraint", [&] {
    auto coh = scalar_cohomology2(c.a2);
    bool ok = expect(coh.z2.dim() == 5, "dim Z2 = 5");
    ok &= expect(coh.b2.dim() == 1, "dim B2 = 1");
    ok &= expect(coh.h2_dim == 4, "dim H2 = 4");
    auto idx = [&](MultiIndex k) {
      for (std::size_t i = 0; i < coh.form_basis.size(); ++i)
        if (coh.form_basis[i] == k) return i;
      return std::size_t(99);
    };
    for (const auto& v : coh.z2.basis())
      ok &= expect(v[idx({1, 4})] == -Rational(1, 2) * v[idx({2, 4})],
                   "cocycle constraint phi_14 = -(b/a) phi_24");
    return ok;
  });

  criterion(9, "induced algebras: Z2 is everything; B2 of the second is one line", [&] {
    auto coh1 = scalar_cohomology2_induced(c.a1, c.t1);
    auto coh2 = scalar_cohomology2_induced(c.a2, c.t2);
    bool ok = expect(coh1.z2.dim() == 4, "Z2 of the first induced algebra is all 4 forms");
    ok &= expect(coh1.z2 == Subspace::full(4), "Z2 equals the full trilinear space");
    ok &= expect(coh2.z2 == Subspace::full(4), "Z2 of the second induced algebra is everything");
    ok &= expect(coh2.b2.dim() == 1, "B2 of the second induced algebra is 1-dimensional");
    std::size_t i123 = 0;
    for (std::size_t i = 0; i < coh2.form_basis.size(); ++i)
      if (coh2.form_basis[i] == MultiIndex{1, 2, 3}) i123 = i;
    ok &= expect(coh2.b2 == Subspace::span(4, {unit_vector(4, i123 + 1)}),
                 "B2 is the line supported on (e1,e2,e3)");
    // the line is generated by the coboundary of the omega_4 coordinate form
    HomNLieAlgebra ind2 = induce_multiplicative(c.a2, c.t2);
    ScalarTensor gen = scalar_d1(ind2, unit_vector(4, 4));
    ok &= expect(!gen.at({1, 2, 3}).is_zero() && gen.entries().size() == 1,
                 "generator comes from omega_4 and is supported on (e1,e2,e3)");
    for (int i = 1; i <= 3; ++i)
      ok &= expect(scalar_d1(ind2, unit_vector(4, i)).is_zero_tensor(),
                   "other coordinate forms have zero coboundary");
    return ok;
  });

  criterion(10, "induced-cocycle tables at two instantiations and the set identity", [&] {
    bool ok = true;
    for (auto params : {std::array<long, 4>{1, 2, 0, 3}, std::array<long, 4>{2, 1, 4, 7}}) {
      auto alg = ts::example1(params[0], params[1], params[2], params[3]);
      ScalarTensor phi(2, 4);
      Rational p(3), q(-7), t(2);
      phi.set({1, 2}, p);
      phi.set({1, 3}, q);
      phi.set({3, 4}, t);
      ScalarTensor psi = induced_scalar_cocycle(alg, c.t1, phi);
      ok &= expect(psi.at({1, 2, 3}) == p && psi.at({1, 2, 4}).is_zero() &&
                       psi.at({1, 3, 4}) == t && psi.at({2, 3, 4}).is_zero(),
                   "first family: psi = (phi_12, 0, phi_34, 0)");
    }
    for (auto params : {std::array<long, 5>{2, 1, 0, 5, -1}, std::array<long, 5>{3, 2, 1, 1, -2}}) {
      Rational a(params[0]), b(params[1]), one(1);
      auto alg = ts::example2(params[0], params[1], params[2], params[3], params[4]);
      Rational p(3), r(-1), s(6), t(2);
      ScalarTensor phi(2, 4);
      phi.set({1, 2}, p);
      phi.set({2, 3}, r);
      phi.set({2, 4}, s);
      phi.set({1, 4}, -(b / a) * s);
      phi.set({3, 4}, t);
      ScalarTensor psi = induced_scalar_cocycle(alg, ts::tau2(params[0]), phi);
      ok &= expect(psi.at({1, 2, 3}) == (one - a) * p + r, "second family: psi_123");
      ok &= expect(psi.at({1, 2, 4}) == s, "second family: psi_124");
      ok &= expect(psi.at({1, 3, 4}) == t + b * (one - a) / a * s, "second family: psi_134");
      ok &= expect(psi.at({2, 3, 4}) == (a - one) * s, "second family: psi_234");
    }
    ok &= expect(induced_cocycle_image_vs_constraint(c.a2, c.t2, Rational(2)),
                 "set identity psi(e2,e3,e4) = (a-1) psi(e1,e2,e4) at a=2");
    ok &= expect(induced_cocycle_image_vs_constraint(c.a2_alt, c.t2_alt, Rational(3)),
                 "set identity at a=3");
    return ok;
  });

  criterion(11, "transfer lemmas pass over full bases on the four corpus algebras", [&] {
    bool ok = true;
    for (const auto& [alg, tau] : {std::pair{c.a1, c.t1}, std::pair{c.a2, c.t2},
                                   std::pair{c.zero, c.tz}, std::pair{c.spanning, c.tsp}}) {
      for (int i = 1; i <= alg.dim(); ++i)
        ok &= expect(coboundary_transfer_check(alg, tau, unit_vector(alg.dim(), i)),
                     alg.name() + ": coboundary transfer for omega_" + std::to_string(i));
      ok &= expect(one_cocycles_are_traces(alg), alg.name() + ": 1-cocycles are traces");

      auto coh = scalar_cohomology2(alg);
      for (const auto& zv : coh.z2.basis()) {
        ScalarTensor phi = scalar_tensor_from_coords(alg.arity(), alg.dim(), coh.form_basis, zv);
        for (int i = 1; i <= alg.dim(); ++i) {
          ScalarTensor phi2 = phi + scalar_d1(alg, unit_vector(alg.dim(), i));
          ok &= expect(class_transfer_check(alg, tau, phi, phi2).same_class,
                       alg.name() + ": class transfer");
        }
      }
      for (int k = 0; k <= 1; ++k)
        Subspace der_k = derivation_space(alg, k);
        for (const auto& fv : der_k.basis()) {
          RMatrix f = matrix_from_coords(alg.dim(), fv);
          ok &= expect(trace_from_derivation(alg, f, k, tau),
                       alg.name() + ": tau o f is a trace");
          auto rep = derivation_transfers(alg, tau, f, k);
          ok &= expect(rep.criterion == rep.direct,
                       alg.name() + ": transfer criterion agrees with the direct check");
        }
    }
    return ok;
  });

  criterion(12, "central extensions by every basis cocycle, and the extension identity", [&] {
    bool ok = true;
    RVector lam{Rational(1), Rational(2), Rational(0), Rational(-1), Rational(3)};
    for (auto [alg, tau] : {std::pair{c.a1, c.t1}, std::pair{c.a2, c.t2}}) {
      auto coh = scalar_cohomology2(alg);
      for (const auto& zv : coh.z2.basis()) {
        ScalarTensor omega = scalar_tensor_from_coords(2, 4, coh.form_basis, zv);
        CentralExtension ext = central_extension(alg, omega, zero_vector(5));
        ok &= expect(ext.extended.dim() == 5 && hom_nambu_defect(ext.extended).empty(),
                     alg.name() + ": extension passes the identity check");
        ok &= expect(induced_extension_check(alg, tau, omega, zero_vector(5)),
                     alg.name() + ": inducing the extension = extending the induced algebra");
        ok &= expect(induced_extension_check(alg, tau, omega, lam),
                     alg.name() + ": the same with a nonzero lambda");
      }
    }
    return ok;
  });

  criterion(13, "storage oracle equivalence and the vanishing composite d2 o d1", [&] {
    bool ok = true;
    for (const auto& alg : c.all()) {
      auto dense = ts::DenseTensor<RVector>::from_skew(alg.bracket());
      MultiIndex idx(alg.arity(), 1);
      while (true) {
        std::vector<RVector> args;
        for (int i : idx) args.push_back(unit_vector(alg.dim(), i));
        if (alg.eval_bracket(args) != dense.eval(args)) {
          ok = expect(false, alg.name() + ": dense evaluator mismatch at " + format_tuple(idx));
          break;
        }
        int i = alg.arity() - 1;
        while (i >= 0 && idx[i] == alg.dim()) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < alg.arity(); ++j) idx[j] = 1;
      }
      RMatrix d2 = scalar_d2_operator(alg);
      auto basis = increasing_tuples(alg.dim(), alg.arity());
      for (int i = 1; i <= alg.dim(); ++i) {
        RVector coords = scalar_tensor_coords(scalar_d1(alg, unit_vector(alg.dim(), i)), basis);
        ok &= expect(is_zero_vector(d2.apply(coords)),
                     alg.name() + ": d2(d1 omega_" + std::to_string(i) + ") = 0");
      }
    }
    return ok;
  });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures;
}
