#pragma once

// Independent test oracles. These deliberately avoid the library's storage
// and elimination strategies: the dense evaluator keeps all d^n entries with
// no skew compression, and the rank oracle runs integer fraction-free
// elimination instead of rational Gauss-Jordan.

#include <map>
#include <random>

#include "homnlie/algebra.hpp"

namespace homnlie::testsupport {

/// Dense multilinear map: every basis tuple carries its own stored value.
template <class V>
class DenseTensor {
public:
  DenseTensor(int arity, int dim, V zero) : arity_(arity), dim_(dim), zero_(std::move(zero)) {}

  static DenseTensor<V> from_skew(const SkewTensor<V>& t) {
    V zero = detail::SkewValueOps<V>::zero(t.dim());
    DenseTensor<V> out(t.arity(), t.dim(), zero);
    MultiIndex idx(t.arity(), 1);
    while (true) {
      out.vals_[idx] = t.at(idx);
      int i = t.arity() - 1;
      while (i >= 0 && idx[i] == t.dim()) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t.arity(); ++j) idx[j] = 1;
    }
    return out;
  }

  const V& at(const MultiIndex& idx) const {
    auto it = vals_.find(idx);
    return it == vals_.end() ? zero_ : it->second;
  }

  /// Full multilinear expansion over all d^n tuples, no skew shortcuts.
  V eval(const std::vector<RVector>& args) const {
    V acc = zero_;
    MultiIndex idx(arity_, 1);
    while (true) {
      Rational coeff(1);
      for (int l = 0; l < arity_; ++l) coeff *= args[l][idx[l] - 1];
      if (!coeff.is_zero())
        detail::SkewValueOps<V>::accumulate(acc, coeff, at(idx));
      int i = arity_ - 1;
      while (i >= 0 && idx[i] == dim_) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < arity_; ++j) idx[j] = 1;
    }
    return acc;
  }

private:
  int arity_, dim_;
  V zero_;
  std::map<MultiIndex, V> vals_;
};

/// Rank by integer Bareiss elimination after clearing denominators row-wise.
inline std::size_t bareiss_rank(const RMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm_den = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class den = m.at(i, j).denominator();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
      lcm_den = lcm_den / g * den;
    }
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = m.at(i, j).numerator() * (lcm_den / m.at(i, j).denominator());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

class RandomRationals {
public:
  explicit RandomRationals(unsigned seed) : gen_(seed), num_(-4, 4), den_(1, 3) {}

  Rational next() { return Rational(num_(gen_), den_(gen_)); }
  Rational next_nonzero() {
    Rational r = next();
    while (r.is_zero()) r = next();
    return r;
  }
  RVector vector(std::size_t dim) {
    RVector v(dim);
    for (auto& x : v) x = next();
    return v;
  }
  RMatrix matrix(std::size_t rows, std::size_t cols) {
    RMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = next();
    return m;
  }
  int index(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

private:
  std::mt19937 gen_;
  std::uniform_int_distribution<long> num_, den_;
};

}  // namespace homnlie::testsupport
