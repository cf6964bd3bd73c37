#include "homnlie/fundamental.hpp"

#include <stdexcept>

namespace homnlie {

FundamentalBasis::FundamentalBasis(int dim_, int weight_)
    : dim(dim_), weight(weight_), elements(increasing_tuples(dim_, weight_)) {}

std::size_t FundamentalBasis::index_of(const MultiIndex& key) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == key) return i;
  throw std::invalid_argument("FundamentalBasis: key not found");
}

LElement l_basis_element(const MultiIndex& key) { return {{key, Rational(1)}}; }

LElement l_add(const LElement& a, const LElement& b) {
  LElement out = a;
  for (const auto& [k, v] : b) {
    auto it = out.find(k);
    if (it == out.end())
      out[k] = v;
    else {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

LElement l_scale(const Rational& c, const LElement& a) {
  LElement out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a) out[k] = c * v;
  return out;
}

bool l_is_zero(const LElement& a) { return a.empty(); }

LElement wedge_expand(const std::vector<RVector>& vectors, int dim) {
  const int k = static_cast<int>(vectors.size());
  LElement out;
  for (const auto& key : increasing_tuples(dim, k)) {
    RMatrix minor(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) minor.at(r, c) = vectors[c][key[r] - 1];
    Rational d = minor.determinant();
    if (!d.is_zero()) out[key] = d;
  }
  return out;
}

LElement alpha_bar(const HomNLieAlgebra& alg, const LElement& x) {
  const auto& a = alg.alpha();
  LElement out;
  for (const auto& [key, coef] : x) {
    std::vector<RVector> mapped;
    for (int i : key) mapped.push_back(a.apply(unit_vector(alg.dim(), i)));
    out = l_add(out, l_scale(coef, wedge_expand(mapped, alg.dim())));
  }
  return out;
}

RVector fundamental_action(const HomNLieAlgebra& alg, const LElement& x, const RVector& z) {
  RVector acc = zero_vector(alg.dim());
  for (const auto& [key, coef] : x) {
    std::vector<RVector> args;
    for (int i : key) args.push_back(unit_vector(alg.dim(), i));
    args.push_back(z);
    acc = add(acc, scale(coef, alg.eval_bracket(args)));
  }
  return acc;
}

LElement leibniz_bracket(const HomNLieAlgebra& alg, const LElement& x, const LElement& y) {
  if (!alg.multiplicative_declared())
    throw std::invalid_argument("leibniz_bracket: algebra must be multiplicative");
  const auto& a = alg.alpha();
  const int d = alg.dim();
  LElement out;
  for (const auto& [ykey, ycoef] : y) {
    const int w = static_cast<int>(ykey.size());
    for (int i = 0; i < w; ++i) {
      std::vector<RVector> parts;
      for (int j = 0; j < w; ++j) {
        RVector ej = unit_vector(d, ykey[j]);
        parts.push_back(j == i ? fundamental_action(alg, x, ej) : a.apply(ej));
      }
      out = l_add(out, l_scale(ycoef, wedge_expand(parts, d)));
    }
  }
  return out;
}

}  // namespace homnlie
