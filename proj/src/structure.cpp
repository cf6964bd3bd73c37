#include "homnlie/structure.hpp"

#include <stdexcept>

namespace homnlie {

static Subspace derived_step(const HomNLieAlgebra& alg, const Subspace& term) {
  std::vector<RVector> gens;
  for (const auto& tuple : increasing_tuples(static_cast<int>(term.dim()), alg.arity())) {
    std::vector<RVector> args;
    for (int i : tuple) args.push_back(term.basis()[i - 1]);
    RVector v = alg.eval_bracket(args);
    if (!is_zero_vector(v)) gens.push_back(std::move(v));
  }
  return Subspace::span(alg.dim(), gens);
}

static Subspace central_step(const HomNLieAlgebra& alg, const Subspace& term,
                             const Subspace& ideal) {
  std::vector<RVector> gens;
  for (const auto& c : term.basis()) {
    for (const auto& tuple : increasing_tuples(static_cast<int>(ideal.dim()), alg.arity() - 1)) {
      std::vector<RVector> args;
      args.push_back(c);
      for (int i : tuple) args.push_back(ideal.basis()[i - 1]);
      RVector v = alg.eval_bracket(args);
      if (!is_zero_vector(v)) gens.push_back(std::move(v));
    }
  }
  return Subspace::span(alg.dim(), gens);
}

static SeriesReport run_series(const HomNLieAlgebra& alg, const Subspace& ideal, int max_steps,
                               SeriesKind kind) {
  require_valid(alg);
  if (!is_ideal(alg, ideal)) throw std::invalid_argument("series: I is not an ideal");
  if (max_steps < 0) max_steps = alg.dim() + 2;

  SeriesReport rep;
  rep.kind = kind;
  rep.terms.push_back(ideal);
  for (int r = 0; r < max_steps; ++r) {
    const Subspace& cur = rep.terms.back();
    Subspace next = kind == SeriesKind::derived ? derived_step(alg, cur)
                                                : central_step(alg, cur, ideal);
    bool same = next == cur;
    rep.terms.push_back(next);
    if (!rep.class_index && next.dim() == 0)
      rep.class_index = static_cast<int>(rep.terms.size()) - 1;
    if (same) {
      rep.stabilized = true;
      break;
    }
  }
  if (!rep.stabilized && rep.terms.size() >= 2 &&
      rep.terms[rep.terms.size() - 1] == rep.terms[rep.terms.size() - 2])
    rep.stabilized = true;
  return rep;
}

SeriesReport derived_series(const HomNLieAlgebra& alg, const Subspace& ideal, int max_steps) {
  return run_series(alg, ideal, max_steps, SeriesKind::derived);
}

SeriesReport central_series(const HomNLieAlgebra& alg, const Subspace& ideal, int max_steps) {
  return run_series(alg, ideal, max_steps, SeriesKind::central);
}

Subspace center(const HomNLieAlgebra& alg) {
  const int d = alg.dim();
  std::vector<RVector> rows;
  for (const auto& xs : increasing_tuples(d, alg.arity() - 1)) {
    // rows of the map z -> [x_1..x_{n-1}, z]
    std::vector<RVector> images;
    for (int z = 1; z <= d; ++z) {
      std::vector<RVector> args;
      for (int i : xs) args.push_back(unit_vector(d, i));
      args.push_back(unit_vector(d, z));
      images.push_back(alg.eval_bracket(args));
    }
    for (int comp = 0; comp < d; ++comp) {
      RVector row(d);
      for (int z = 0; z < d; ++z) row[z] = images[z][comp];
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::full(d);
  return kernel_basis(RMatrix::from_rows(rows));
}

std::optional<int> solvability_class(const HomNLieAlgebra& alg) {
  return derived_series(alg, Subspace::full(alg.dim())).class_index;
}

std::optional<int> nilpotency_class(const HomNLieAlgebra& alg) {
  return central_series(alg, Subspace::full(alg.dim())).class_index;
}

std::optional<RVector> find_unit_like(const HomNLieAlgebra& alg, const TraceForm& tau) {
  const int d = alg.dim();
  VectorTensor induced = induced_bracket(alg, tau);
  // linear system in u: induced(u, e_T) = bracket(e_T) over increasing n-tuples
  std::vector<RVector> rows;
  RVector rhs;
  for (const auto& key : increasing_tuples(d, alg.arity())) {
    std::vector<RVector> args(1);
    for (int i : key) args.push_back(unit_vector(d, i));
    std::vector<RVector> images;  // induced(e_u, e_T) per unit u
    for (int u = 1; u <= d; ++u) {
      args[0] = unit_vector(d, u);
      images.push_back(induced.eval(args));
    }
    std::vector<RVector> bargs;
    for (int i : key) bargs.push_back(unit_vector(d, i));
    RVector target = alg.eval_bracket(bargs);
    for (int comp = 0; comp < d; ++comp) {
      RVector row(d);
      for (int u = 0; u < d; ++u) row[u] = images[u][comp];
      rows.push_back(std::move(row));
      rhs.push_back(target[comp]);
    }
  }
  if (rows.empty()) return RVector(d);
  return solve(RMatrix::from_rows(rows), rhs);
}

StructureComparison compare_structures(const HomNLieAlgebra& alg, const TraceForm& tau) {
  HomNLieAlgebra induced = induce_multiplicative(alg, tau);
  const int d = alg.dim();
  Subspace whole = Subspace::full(d);

  SeriesReport c_base = central_series(alg, whole);
  SeriesReport c_ind = central_series(induced, whole);
  std::size_t depth = std::max(c_base.terms.size(), c_ind.terms.size());
  auto term_at = [](const SeriesReport& s, std::size_t p) -> const Subspace& {
    return p < s.terms.size() ? s.terms[p] : s.terms.back();  // stabilized tail
  };

  StructureComparison out{};
  out.central_series_contained = true;
  for (std::size_t p = 0; p < depth; ++p)
    if (!term_at(c_base, p).includes(term_at(c_ind, p))) out.central_series_contained = false;

  auto u = find_unit_like(alg, tau);
  out.unit_exists = u.has_value();
  out.central_series_equal_when_unit = true;
  if (u) {
    for (std::size_t p = 0; p < depth; ++p)
      if (!(term_at(c_base, p) == term_at(c_ind, p))) out.central_series_equal_when_unit = false;
  }

  Subspace z_base = center(alg);
  Subspace z_ind = center(induced);
  // {c in Z(A) : tau(c) = 0} as a subspace
  std::vector<RVector> rows;
  rows.push_back(tau.coefficients);
  Subspace tau_kernel = kernel_basis(RMatrix::from_rows(rows));
  Subspace killed_center = intersect(z_base, tau_kernel);
  out.center_transfer = z_ind.includes(killed_center);

  bool base_abelian = alg.bracket().is_zero_tensor();
  bool tau_nonzero_on_center = false;
  for (const auto& v : z_base.basis())
    if (!tau(v).is_zero()) tau_nonzero_on_center = true;
  out.nonabelian_transfer = true;
  if (!base_abelian && tau_nonzero_on_center)
    out.nonabelian_transfer = !induced.bracket().is_zero_tensor();

  auto np_base = c_base.class_index;
  auto np_ind = c_ind.class_index;
  out.nilpotency_bound = true;
  if (np_base) {
    if (!np_ind || *np_ind > *np_base) out.nilpotency_bound = false;
    if (u && (!np_ind || *np_ind != *np_base)) out.nilpotency_bound = false;
  }
  return out;
}

}  // namespace homnlie
