#pragma once

#include <optional>

#include "homnlie/induction.hpp"

namespace homnlie {

enum class SeriesKind { derived, central };

struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace> terms;       // term 0 is the starting ideal
  bool stabilized = false;           // last two terms equal
  std::optional<int> class_index;    // least r with term r = 0
};

/// D^0 = I, D^{r+1} = [D^r, ..., D^r]; spans are generated over canonical
/// basis tuples of each term. Stops at stabilization or max_steps.
SeriesReport derived_series(const HomNLieAlgebra& alg, const Subspace& ideal, int max_steps = -1);

/// C^0 = I, C^{r+1} = [C^r, I, ..., I].
SeriesReport central_series(const HomNLieAlgebra& alg, const Subspace& ideal, int max_steps = -1);

/// Kernel of the stacked adjoint-action matrices over increasing (n-1)-tuples.
Subspace center(const HomNLieAlgebra& alg);

std::optional<int> solvability_class(const HomNLieAlgebra& alg);
std::optional<int> nilpotency_class(const HomNLieAlgebra& alg);

/// Some u with [u, x_1..x_n]_tau = [x_1..x_n] for all basis tuples, if any.
std::optional<RVector> find_unit_like(const HomNLieAlgebra& alg, const TraceForm& tau);

/// Machine-checked comparison verdicts between a multiplicative algebra and
/// its induced algebra, per the series / center / nilpotency transfer results.
struct StructureComparison {
  bool central_series_contained;   // C^p(A_tau) subset of C^p(A) for all computed p
  bool unit_exists;                // witness for the equality clauses
  bool central_series_equal_when_unit;   // vacuous (true) when no unit
  bool center_transfer;            // {c in Z(A) : tau(c)=0} subset of Z(A_tau)
  bool nonabelian_transfer;        // A nonabelian & tau(Z(A)) != 0 => A_tau nonabelian
  bool nilpotency_bound;           // A nilpotent of class p => A_tau nilpotent of class <= p
                                   //   and classes equal when a unit exists
  bool all() const {
    return central_series_contained && central_series_equal_when_unit && center_transfer &&
           nonabelian_transfer && nilpotency_bound;
  }
};

StructureComparison compare_structures(const HomNLieAlgebra& alg, const TraceForm& tau);

}  // namespace homnlie
