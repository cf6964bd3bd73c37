#pragma once

#include <map>

#include "homnlie/algebra.hpp"

namespace homnlie {

/// Ordered basis of L(A) = wedge^{n-1} A: lexicographic strictly increasing
/// (n-1)-tuples, dimension C(d, n-1).
struct FundamentalBasis {
  int dim;
  int weight;  // n-1
  std::vector<MultiIndex> elements;

  FundamentalBasis(int dim_, int weight_);
  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const MultiIndex& key) const;
};

/// Element of L(A): coefficients over the fundamental basis.
using LElement = std::map<MultiIndex, Rational>;

LElement l_basis_element(const MultiIndex& key);
LElement l_add(const LElement& a, const LElement& b);
LElement l_scale(const Rational& c, const LElement& a);
bool l_is_zero(const LElement& a);

/// Expansion of v_1 ^ ... ^ v_k into the exterior basis; the coefficient at
/// an increasing tuple J is the k x k minor det(v_l[J_r]).
LElement wedge_expand(const std::vector<RVector>& vectors, int dim);

/// alpha-bar: componentwise application of the twist, then wedge expansion.
LElement alpha_bar(const HomNLieAlgebra& alg, const LElement& x);

/// Fundamental action X . z = [x_1, ..., x_{n-1}, z].
RVector fundamental_action(const HomNLieAlgebra& alg, const LElement& x, const RVector& z);

/// Hom-Leibniz composition [X,Y]_alpha = sum_i a(y_1)^..^(X.y_i)^..^a(y_{n-1}).
LElement leibniz_bracket(const HomNLieAlgebra& alg, const LElement& x, const LElement& y);

}  // namespace homnlie
