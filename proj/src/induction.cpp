#include "homnlie/induction.hpp"

#include <sstream>
#include <stdexcept>

namespace homnlie {

bool is_phi_trace(const TraceForm& tau, const HomNLieAlgebra& alg) {
  if (tau.dim() != static_cast<std::size_t>(alg.dim()))
    throw std::invalid_argument("is_phi_trace: dimension mismatch");
  for (const auto& [key, val] : alg.bracket().entries())
    if (!tau(val).is_zero()) return false;
  return true;
}

static MultiIndex first_trace_violation(const TraceForm& tau, const HomNLieAlgebra& alg) {
  for (const auto& [key, val] : alg.bracket().entries())
    if (!tau(val).is_zero()) return key;
  return {};
}

VectorTensor induced_bracket(const HomNLieAlgebra& alg, const TraceForm& tau) {
  require_valid(alg);
  if (!is_phi_trace(tau, alg)) {
    std::ostringstream os;
    os << "induced_bracket: tau is not a trace; tau(bracket"
       << format_tuple(first_trace_violation(tau, alg)) << ") != 0";
    throw std::invalid_argument(os.str());
  }
  VectorTensor out = induce_tensor(alg.bracket(), tau);
  for (const auto& [key, val] : out.entries())
    if (!tau(val).is_zero())
      throw std::logic_error("induced_bracket: tau is not a phi_tau-trace (internal)");
  return out;
}

GeneralConditionsReport check_general_conditions(const HomNLieAlgebra& alg, const TraceForm& tau,
                                                 const LinearEndomorphism& alpha_n) {
  const int d = alg.dim();
  std::vector<LinearEndomorphism> maps = alg.twists();
  maps.push_back(alpha_n);
  std::vector<RVector> mapped_basis;  // a_i(e_x) for quick reuse
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (int x = 1; x <= d; ++x) mapped_basis.push_back(maps[i].apply(unit_vector(d, x)));
  auto img = [&](std::size_t i, int x) -> const RVector& { return mapped_basis[i * d + (x - 1)]; };

  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = 0; j < maps.size(); ++j)
      for (int x = 1; x <= d; ++x)
        for (int y = 1; y <= d; ++y) {
          Rational tix = tau(img(i, x));
          Rational tjy = tau(img(j, y));
          if (i == j) {
            // scalar condition: tau(a_i x) tau(y) = tau(x) tau(a_i y)
            Rational lhs = tix * tau.coefficients[y - 1];
            Rational rhs = tau.coefficients[x - 1] * tau(img(i, y));
            if (lhs != rhs)
              return {false, "tau(a_i x) tau(y) = tau(x) tau(a_i y)",
                      static_cast<int>(i + 1), static_cast<int>(i + 1), x, y};
          }
          // vector condition: tau(a_i x) a_j(y) = a_i(x) tau(a_j y), componentwise
          RVector lhs = scale(tix, img(j, y));
          RVector rhs = scale(tjy, img(i, x));
          if (lhs != rhs)
            return {false, "tau(a_i x) a_j(y) = a_i(x) tau(a_j y)",
                    static_cast<int>(i + 1), static_cast<int>(j + 1), x, y};
        }
  return {};
}

static HomNLieAlgebra build_induced(const HomNLieAlgebra& alg, const TraceForm& tau,
                                    std::vector<LinearEndomorphism> twists, bool multiplicative,
                                    const std::string& suffix) {
  VectorTensor b = induced_bracket(alg, tau);
  HomNLieAlgebra out(alg.name().empty() ? suffix : alg.name() + suffix, alg.dim(),
                     alg.arity() + 1, std::move(b), std::move(twists), multiplicative);
  require_valid(out);  // Hom-Nambu and (when declared) multiplicativity
  return out;
}

HomNLieAlgebra induce_general(const HomNLieAlgebra& alg, const TraceForm& tau,
                              const LinearEndomorphism& alpha_n) {
  require_valid(alg);
  if (alpha_n.rows() != static_cast<std::size_t>(alg.dim()) ||
      alpha_n.cols() != static_cast<std::size_t>(alg.dim()))
    throw std::invalid_argument("induce_general: alpha_n shape mismatch");
  auto rep = check_general_conditions(alg, tau, alpha_n);
  if (!rep.ok) {
    std::ostringstream os;
    os << "induce_general: condition " << rep.condition << " fails at i=" << rep.i
       << " j=" << rep.j << " x=e" << rep.x << " y=e" << rep.y;
    throw std::invalid_argument(os.str());
  }
  std::vector<LinearEndomorphism> twists = alg.twists();
  twists.push_back(alpha_n);
  return build_induced(alg, tau, std::move(twists), false, "_tau");
}

HomNLieAlgebra induce_multiplicative(const HomNLieAlgebra& alg, const TraceForm& tau) {
  require_valid(alg);
  if (!alg.multiplicative_declared() || !is_multiplicative(alg).ok)
    throw std::invalid_argument("induce_multiplicative: algebra is not multiplicative");
  if (!is_phi_trace(tau, alg))
    throw std::invalid_argument("induce_multiplicative: tau is not a trace");
  if (!(tau.compose(alg.alpha()) == tau))
    throw std::invalid_argument("induce_multiplicative: tau o alpha != tau");
  std::vector<LinearEndomorphism> twists(alg.arity(), alg.alpha());
  return build_induced(alg, tau, std::move(twists), true, "_tau");
}

InducedAlgebra induce_auto(const HomNLieAlgebra& alg, const TraceForm& tau,
                           const std::optional<LinearEndomorphism>& alpha_n) {
  bool mult_ok = alg.multiplicative_declared() && is_multiplicative(alg).ok &&
                 is_phi_trace(tau, alg) && tau.compose(alg.alpha()) == tau;
  if (mult_ok) return {induce_multiplicative(alg, tau), InductionTheorem::multiplicative};
  if (alpha_n) return {induce_general(alg, tau, *alpha_n), InductionTheorem::general};
  throw std::invalid_argument(
      "induce_auto: multiplicative construction inapplicable and no alpha_n supplied");
}

Subspace solve_trace_space(const HomNLieAlgebra& alg, bool require_alpha_compatible) {
  const int d = alg.dim();
  std::vector<RVector> rows;
  for (const auto& [key, val] : alg.bracket().entries()) rows.push_back(val);
  if (require_alpha_compatible) {
    const auto& a = alg.alpha();
    if (!alg.multiplicative_declared())
      throw std::invalid_argument("solve_trace_space: alpha constraint needs a multiplicative algebra");
    // rows of (alpha^T - I): tau(alpha e_j) - tau(e_j) = 0
    for (int j = 0; j < d; ++j) {
      RVector r = a.column(j);
      r[j] -= Rational(1);
      rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) return Subspace::full(d);
  return kernel_basis(RMatrix::from_rows(rows));
}

HomNLieAlgebra twist(const HomNLieAlgebra& alg, const LinearEndomorphism& beta) {
  require_valid(alg);
  if (!is_weak_morphism(beta, alg, alg))
    throw std::invalid_argument("twist: beta is not a weak morphism");
  VectorTensor b(alg.arity(), alg.dim());
  for (const auto& [key, val] : alg.bracket().entries()) b.set(key, beta.apply(val));
  std::vector<LinearEndomorphism> twists;
  for (const auto& t : alg.twists()) twists.push_back(beta * t);
  bool mult = false;
  if (alg.multiplicative_declared() && alg.uniform_twists() &&
      beta * alg.alpha() == alg.alpha() * beta)
    mult = true;
  HomNLieAlgebra out(alg.name() + "_twisted", alg.dim(), alg.arity(), std::move(b),
                     std::move(twists), mult);
  require_valid(out);
  return out;
}

bool check_twist_induce_commute(const HomNLieAlgebra& n_lie, const LinearEndomorphism& alpha,
                                const TraceForm& tau) {
  for (const auto& t : n_lie.twists())
    if (t != RMatrix::identity(n_lie.dim()))
      throw std::invalid_argument("check_twist_induce_commute: expected identity twists");
  // twist then induce
  HomNLieAlgebra twisted = twist(n_lie, alpha);
  VectorTensor twist_then_induce = induced_bracket(twisted, tau);
  // induce then twist: alpha o (bracket induced by tau)
  VectorTensor induced = induced_bracket(n_lie, tau);
  VectorTensor induce_then_twist(induced.arity(), induced.dim());
  for (const auto& [key, val] : induced.entries()) induce_then_twist.set(key, alpha.apply(val));
  return twist_then_induce == induce_then_twist;
}

bool subalgebra_transfers(const HomNLieAlgebra& alg, const TraceForm& tau, const Subspace& s) {
  if (!is_subalgebra(alg, s))
    throw std::invalid_argument("subalgebra_transfers: S is not a subalgebra");
  HomNLieAlgebra induced = induce_multiplicative(alg, tau);  // extra twist is alpha itself
  return is_subalgebra(induced, s);
}

IdealTransferReport ideal_in_induced(const HomNLieAlgebra& alg, const TraceForm& tau,
                                     const Subspace& j) {
  if (!is_ideal(alg, j)) throw std::invalid_argument("ideal_in_induced: J is not an ideal");
  HomNLieAlgebra induced = induce_multiplicative(alg, tau);

  bool bracket_inside = true;
  for (const auto& [key, val] : alg.bracket().entries())
    if (!j.contains(val)) {
      bracket_inside = false;
      break;
    }
  bool in_kernel = true;
  for (const auto& v : j.basis())
    if (!tau(v).is_zero()) {
      in_kernel = false;
      break;
    }
  IdealTransferReport rep{bracket_inside || in_kernel, is_ideal(induced, j)};
  if (rep.criterion != rep.direct)
    throw std::logic_error("ideal_in_induced: criterion and direct check disagree (internal)");
  return rep;
}

}  // namespace homnlie
