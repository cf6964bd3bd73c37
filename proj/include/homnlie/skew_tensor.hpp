#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "homnlie/linalg.hpp"

namespace homnlie {

/// Basis index tuple, 1-based. Stored keys are strictly increasing;
/// evaluation accepts arbitrary tuples (sorted with permutation sign).
using MultiIndex = std::vector<int>;

/// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
inline int sort_with_sign(MultiIndex& idx) {
  int sign = 1;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  return sign;
}

/// All strictly increasing k-tuples over {1..dim}, lexicographically ordered.
inline std::vector<MultiIndex> increasing_tuples(int dim, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > dim) return out;
  MultiIndex cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == dim - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace detail {

template <class V>
struct SkewValueOps;

template <>
struct SkewValueOps<Rational> {
  static Rational zero(std::size_t) { return Rational(0); }
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static Rational negate(const Rational& v) { return -v; }
  static Rational scaled(const Rational& c, const Rational& v) { return c * v; }
  static void accumulate(Rational& acc, const Rational& c, const Rational& v) { acc += c * v; }
  static std::size_t extent(const Rational&) { return 0; }
};

template <>
struct SkewValueOps<RVector> {
  static RVector zero(std::size_t dim) { return RVector(dim); }
  static bool is_zero(const RVector& v) { return is_zero_vector(v); }
  static RVector negate(const RVector& v) { return scale(Rational(-1), v); }
  static RVector scaled(const Rational& c, const RVector& v) { return scale(c, v); }
  static void accumulate(RVector& acc, const Rational& c, const RVector& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
  }
  static std::size_t extent(const RVector& v) { return v.size(); }
};

}  // namespace detail

/// Skew-symmetric multilinear map stored sparsely on strictly increasing
/// index tuples. V is Rational (scalar codomain) or RVector (vector codomain).
template <class V>
class SkewTensor {
  using Ops = detail::SkewValueOps<V>;

public:
  SkewTensor(int arity, int dim) : arity_(arity), dim_(dim) {
    if (arity < 1 || dim < 0) throw std::invalid_argument("SkewTensor: bad shape");
  }

  int arity() const { return arity_; }
  int dim() const { return dim_; }

  /// Adds val at idx (any tuple); skew-normalizes the key. A repeated index
  /// forces val to be zero.
  void add_at(MultiIndex idx, const V& val) {
    check_index(idx);
    if constexpr (std::is_same_v<V, RVector>) {
      if (Ops::extent(val) != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("SkewTensor: value dimension mismatch");
    }
    int sign = sort_with_sign(idx);
    if (sign == 0) {
      if (!Ops::is_zero(val))
        throw std::invalid_argument("SkewTensor: nonzero value at repeated index");
      return;
    }
    V v = sign == 1 ? val : Ops::negate(val);
    auto it = vals_.find(idx);
    if (it == vals_.end()) {
      if (!Ops::is_zero(v)) vals_.emplace(std::move(idx), std::move(v));
    } else {
      Ops::accumulate(it->second, Rational(1), v);
      if (Ops::is_zero(it->second)) vals_.erase(it);
    }
  }

  void set(MultiIndex idx, const V& val) {
    check_index(idx);
    int sign = sort_with_sign(idx);
    if (sign == 0) {
      if (!Ops::is_zero(val))
        throw std::invalid_argument("SkewTensor: nonzero value at repeated index");
      return;
    }
    V v = sign == 1 ? val : Ops::negate(val);
    if (Ops::is_zero(v))
      vals_.erase(idx);
    else
      vals_[idx] = std::move(v);
  }

  /// Value at an arbitrary basis tuple, with the permutation sign applied.
  V at(MultiIndex idx) const {
    check_index(idx);
    int sign = sort_with_sign(idx);
    if (sign == 0) return Ops::zero(dim_);
    auto it = vals_.find(idx);
    if (it == vals_.end()) return Ops::zero(dim_);
    return sign == 1 ? it->second : Ops::negate(it->second);
  }

  /// Multilinear skew evaluation at coordinate vectors: for each stored key J,
  /// the contribution is value(J) times the minor det(args[l][J[k]]).
  V eval(std::span<const RVector> args) const {
    if (args.size() != static_cast<std::size_t>(arity_))
      throw std::invalid_argument("SkewTensor::eval: arity mismatch");
    for (const auto& a : args)
      if (a.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("SkewTensor::eval: dimension mismatch");
    V acc = Ops::zero(dim_);
    for (const auto& [key, val] : vals_) {
      RMatrix minor(arity_, arity_);
      for (int k = 0; k < arity_; ++k)
        for (int l = 0; l < arity_; ++l) minor.at(k, l) = args[l][key[k] - 1];
      Rational d = minor.determinant();
      if (!d.is_zero()) Ops::accumulate(acc, d, val);
    }
    return acc;
  }

  V eval(const std::vector<RVector>& args) const {
    return eval(std::span<const RVector>(args.data(), args.size()));
  }

  const std::map<MultiIndex, V>& entries() const { return vals_; }
  bool is_zero_tensor() const { return vals_.empty(); }

  bool operator==(const SkewTensor& o) const {
    return arity_ == o.arity_ && dim_ == o.dim_ && vals_ == o.vals_;
  }
  bool operator!=(const SkewTensor& o) const { return !(*this == o); }

  SkewTensor operator+(const SkewTensor& o) const {
    require_same_shape(o);
    SkewTensor r = *this;
    for (const auto& [k, v] : o.vals_) r.add_at(k, v);
    return r;
  }

  SkewTensor operator-(const SkewTensor& o) const {
    require_same_shape(o);
    SkewTensor r = *this;
    for (const auto& [k, v] : o.vals_) r.add_at(k, Ops::negate(v));
    return r;
  }

  SkewTensor scaled(const Rational& c) const {
    SkewTensor r(arity_, dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : vals_) r.vals_[k] = Ops::scaled(c, v);
    return r;
  }

private:
  void check_index(const MultiIndex& idx) const {
    if (idx.size() != static_cast<std::size_t>(arity_))
      throw std::invalid_argument("SkewTensor: index arity mismatch");
    for (int i : idx)
      if (i < 1 || i > dim_) throw std::invalid_argument("SkewTensor: index out of range");
  }

  void require_same_shape(const SkewTensor& o) const {
    if (arity_ != o.arity_ || dim_ != o.dim_)
      throw std::invalid_argument("SkewTensor: shape mismatch");
  }

  int arity_, dim_;
  std::map<MultiIndex, V> vals_;
};

using ScalarTensor = SkewTensor<Rational>;
using VectorTensor = SkewTensor<RVector>;

}  // namespace homnlie
