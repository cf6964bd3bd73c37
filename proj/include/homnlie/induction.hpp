#pragma once

#include <optional>
#include <string>

#include "homnlie/algebra.hpp"

namespace homnlie {

/// True iff tau vanishes on every bracket value (checked over increasing
/// basis tuples; multilinearity covers the rest).
bool is_phi_trace(const TraceForm& tau, const HomNLieAlgebra& alg);

/// The (n+1)-ary alternating sum
///   phi_tau(x_1..x_{n+1}) = sum_k (-1)^{k-1} tau(x_k) phi(.., x_k omitted, ..)
/// applied to any skew tensor; used for brackets, scalar and adjoint cochains,
/// and extension cocycles alike.
template <class V>
SkewTensor<V> induce_tensor(const SkewTensor<V>& t, const TraceForm& tau) {
  if (tau.dim() != static_cast<std::size_t>(t.dim()))
    throw std::invalid_argument("induce_tensor: dimension mismatch");
  SkewTensor<V> out(t.arity() + 1, t.dim());
  for (const auto& key : increasing_tuples(t.dim(), t.arity() + 1)) {
    for (int k = 0; k <= t.arity(); ++k) {
      const Rational& c = tau.coefficients[key[k] - 1];
      if (c.is_zero()) continue;
      MultiIndex rest;
      for (int j = 0; j <= t.arity(); ++j)
        if (j != k) rest.push_back(key[j]);
      auto v = t.at(rest);
      if (detail::SkewValueOps<V>::is_zero(v)) continue;
      Rational coeff = (k % 2 == 0) ? c : -c;
      out.add_at(key, detail::SkewValueOps<V>::scaled(coeff, v));
    }
  }
  return out;
}

/// Induced bracket phi_tau of a validated algebra; rejects tau that is not a
/// phi-trace (the violating tuple is rendered into the error message) and
/// asserts that tau is a phi_tau-trace on the result.
VectorTensor induced_bracket(const HomNLieAlgebra& alg, const TraceForm& tau);

struct GeneralConditionsReport {
  bool ok = true;
  // first failing instance: which condition, twist indices and basis pair
  std::string condition;
  int i = 0, j = 0, x = 0, y = 0;
};

/// The two compatibility conditions
///   tau(a_i x) tau(y) = tau(x) tau(a_i y)
///   tau(a_i x) a_j(y) = a_i(x) tau(a_j y)
/// verified for all i,j over the twist list extended by alpha_n, on all basis
/// pairs; the second is vector-valued and checked componentwise.
GeneralConditionsReport check_general_conditions(const HomNLieAlgebra& alg, const TraceForm& tau,
                                                 const LinearEndomorphism& alpha_n);

/// (n+1)-Hom-Lie algebra with twists (alpha_1..alpha_{n-1}, alpha_n); requires
/// the general conditions and the trace property; the output is re-verified
/// against the Hom-Nambu identity.
HomNLieAlgebra induce_general(const HomNLieAlgebra& alg, const TraceForm& tau,
                              const LinearEndomorphism& alpha_n);

/// (n+1)-Hom-Lie algebra with the same alpha in every slot; requires a
/// multiplicative algebra, the trace property, and tau o alpha = tau. The
/// output is verified multiplicative and Hom-Nambu clean.
HomNLieAlgebra induce_multiplicative(const HomNLieAlgebra& alg, const TraceForm& tau);

enum class InductionTheorem { multiplicative, general };

struct InducedAlgebra {
  HomNLieAlgebra algebra;
  InductionTheorem licensed_by;
};

/// Prefers the multiplicative construction when its hypotheses hold, falling
/// back to the general one when alpha_n is supplied; records the provenance.
InducedAlgebra induce_auto(const HomNLieAlgebra& alg, const TraceForm& tau,
                           const std::optional<LinearEndomorphism>& alpha_n);

/// Basis of {tau : tau o bracket = 0} (optionally also tau o alpha = tau),
/// as a canonical subspace of coefficient vectors.
Subspace solve_trace_space(const HomNLieAlgebra& alg, bool require_alpha_compatible);

/// Yau twist: bracket_beta = beta o bracket, twists beta o alpha_i. beta must
/// be a weak morphism; the result is multiplicative when the input is and
/// beta commutes with alpha (asserted).
HomNLieAlgebra twist(const HomNLieAlgebra& alg, const LinearEndomorphism& beta);

/// Tensor equality of twist-then-induce against induce-then-twist for an
/// n-Lie algebra (identity twists), morphism alpha and admissible tau.
bool check_twist_induce_commute(const HomNLieAlgebra& n_lie, const LinearEndomorphism& alpha,
                                const TraceForm& tau);

/// Direct check that a subalgebra closed under the extra twist stays a
/// subalgebra of the induced algebra.
bool subalgebra_transfers(const HomNLieAlgebra& alg, const TraceForm& tau, const Subspace& s);

struct IdealTransferReport {
  bool criterion;  // bracket(A..A) in J, or J in ker tau
  bool direct;     // is_ideal on the induced algebra
};

/// Evaluates the ideal-transfer criterion and the direct check on the induced
/// algebra; throws if the two disagree (they are equivalent by construction).
IdealTransferReport ideal_in_induced(const HomNLieAlgebra& alg, const TraceForm& tau,
                                     const Subspace& j);

}  // namespace homnlie
