#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homnlie/skew_tensor.hpp"

namespace homnlie {

/// d x d rational matrix acting on coordinates; column j is the image of
/// basis vector j. Houses twist maps, derivations and extension data.
using LinearEndomorphism = RMatrix;

/// Linear form tau(sum x_i e_i) = sum t_i x_i.
struct TraceForm {
  RVector coefficients;

  explicit TraceForm(RVector c) : coefficients(std::move(c)) {}
  static TraceForm zero(std::size_t dim) { return TraceForm(RVector(dim)); }

  std::size_t dim() const { return coefficients.size(); }
  Rational operator()(const RVector& x) const { return dot(coefficients, x); }
  bool is_zero() const { return is_zero_vector(coefficients); }

  /// tau o M as a linear form (row-vector times matrix).
  TraceForm compose(const RMatrix& m) const;

  bool operator==(const TraceForm& o) const { return coefficients == o.coefficients; }
};

/// Finite-dimensional n-Hom-Lie algebra given by structure constants and
/// twist maps alpha_1..alpha_{n-1}. Structural invariants (shapes, skew keys,
/// equal twists when declared multiplicative) are enforced at construction;
/// the defining identity is checked by hom_nambu_defect / require_valid.
class HomNLieAlgebra {
public:
  HomNLieAlgebra(std::string name, int dim, int arity, VectorTensor bracket,
                 std::vector<LinearEndomorphism> twists, bool multiplicative_declared);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const VectorTensor& bracket() const { return bracket_; }
  const std::vector<LinearEndomorphism>& twists() const { return twists_; }
  bool multiplicative_declared() const { return multiplicative_declared_; }

  /// The common twist map; requires all twists equal.
  const LinearEndomorphism& alpha() const;
  bool uniform_twists() const;

  RVector eval_bracket(const std::vector<RVector>& args) const;

private:
  std::string name_;
  int dim_, arity_;
  VectorTensor bracket_;
  std::vector<LinearEndomorphism> twists_;
  bool multiplicative_declared_;
};

struct NambuDefect {
  MultiIndex x_tuple;   // strictly increasing (n-1)-tuple
  MultiIndex y_tuple;   // arbitrary n-tuple
  RVector residual;     // LHS - RHS of the identity at this instance
};

/// All basis-tuple instances violating the Hom-Nambu identity; empty iff the
/// identity holds. x ranges over increasing (n-1)-tuples, y over all n-tuples.
std::vector<NambuDefect> hom_nambu_defect(const HomNLieAlgebra& alg);

struct MultiplicativityCheck {
  bool ok = false;
  std::optional<MultiIndex> witness;  // first failing increasing n-tuple
};

/// True iff alpha(bracket(T)) = bracket(alpha T) on increasing basis tuples.
/// Requires uniform twists.
MultiplicativityCheck is_multiplicative(const HomNLieAlgebra& alg);

/// Bracket compatibility f([x]) = {f x} checked over increasing basis tuples.
bool is_weak_morphism(const RMatrix& f, const HomNLieAlgebra& a, const HomNLieAlgebra& b);

/// Weak morphism plus all twist intertwinings f o alpha_i = beta_i o f.
bool is_morphism(const RMatrix& f, const HomNLieAlgebra& a, const HomNLieAlgebra& b);

bool is_subalgebra(const HomNLieAlgebra& alg, const Subspace& s);
bool is_ideal(const HomNLieAlgebra& alg, const Subspace& s);

/// Throws std::invalid_argument (with a witness rendered into the message)
/// unless the algebra passes the Hom-Nambu check and, when declared
/// multiplicative, the morphism check. Downstream constructors call this.
void require_valid(const HomNLieAlgebra& alg);

std::string format_tuple(const MultiIndex& t);
std::string format_vector(const RVector& v);

}  // namespace homnlie
