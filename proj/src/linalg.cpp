#include "homnlie/linalg.hpp"

#include <stdexcept>

namespace homnlie {

RVector zero_vector(std::size_t dim) { return RVector(dim); }

RVector unit_vector(std::size_t dim, std::size_t one_based_index) {
  if (one_based_index < 1 || one_based_index > dim)
    throw std::invalid_argument("unit_vector: index out of range");
  RVector v(dim);
  v[one_based_index - 1] = Rational(1);
  return v;
}

bool is_zero_vector(const RVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

static void check_same_length(const RVector& a, const RVector& b, const char* op) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(op) + ": length mismatch");
}

RVector add(const RVector& a, const RVector& b) {
  check_same_length(a, b, "add");
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVector sub(const RVector& a, const RVector& b) {
  check_same_length(a, b, "sub");
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVector scale(const Rational& c, const RVector& v) {
  RVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rational dot(const RVector& a, const RVector& b) {
  check_same_length(a, b, "dot");
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RMatrix RMatrix::from_rows(const std::vector<RVector>& rows) {
  if (rows.empty()) return RMatrix(0, 0);
  RMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RMatrix RMatrix::from_columns(const std::vector<RVector>& cols) {
  if (cols.empty()) return RMatrix(0, 0);
  RMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("from_columns: ragged columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RVector RMatrix::row(std::size_t i) const {
  RVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

RVector RMatrix::column(std::size_t j) const {
  RVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RMatrix multiply: shape mismatch");
  RMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

RMatrix RMatrix::operator+(const RMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RMatrix add: shape mismatch");
  RMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RMatrix RMatrix::operator-(const RMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RMatrix sub: shape mismatch");
  RMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RVector RMatrix::apply(const RVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RMatrix apply: length mismatch");
  RVector r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) r[i] += at(i, j) * v[j];
  }
  return r;
}

RMatrix RMatrix::pow(unsigned k) const {
  if (rows_ != cols_) throw std::invalid_argument("RMatrix pow: not square");
  RMatrix acc = identity(rows_);
  for (unsigned i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

bool RMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RMatrix RMatrix::rref(std::size_t* rank, std::vector<std::size_t>* pivots) const {
  RMatrix m = *this;
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (rank) *rank = r;
  if (pivots) *pivots = piv;
  return m;
}

Rational RMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  RMatrix m = *this;
  Rational det(1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t sel = c;
    while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
    if (sel == rows_) return Rational(0);
    if (sel != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rational inv = Rational(1) / m.at(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<RVector> basis;
  for (std::size_t i = 1; i <= ambient_dim; ++i) basis.push_back(unit_vector(ambient_dim, i));
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RVector>& generators) {
  for (const auto& g : generators)
    if (g.size() != ambient_dim) throw std::invalid_argument("Subspace::span: ambient mismatch");
  if (generators.empty()) return zero(ambient_dim);
  std::size_t rank = 0;
  RMatrix r = RMatrix::from_rows(generators).rref(&rank);
  std::vector<RVector> basis;
  for (std::size_t i = 0; i < rank; ++i) basis.push_back(r.row(i));
  return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains(const RVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
  // reduce v against the echelon basis
  RVector w = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (p < ambient_ && b[p].is_zero()) ++p;
    if (p == ambient_) continue;
    if (!w[p].is_zero()) {
      Rational f = w[p];  // pivot of b is 1
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * b[j];
    }
  }
  return is_zero_vector(w);
}

bool Subspace::includes(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::includes: ambient mismatch");
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Subspace kernel_basis(const RMatrix& m) {
  std::size_t rank = 0;
  std::vector<std::size_t> piv;
  RMatrix r = m.rref(&rank, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RVector> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    RVector v(m.cols());
    v[c] = Rational(1);
    for (std::size_t i = 0; i < rank; ++i) v[piv[i]] = -r.at(i, c);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

std::pair<Subspace, std::size_t> image_and_rank(const RMatrix& m) {
  std::vector<RVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  Subspace s = Subspace::span(m.rows(), cols);
  return {s, s.dim()};
}

std::optional<RVector> solve(const RMatrix& m, const RVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: length mismatch");
  RMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> piv;
  RMatrix r = aug.rref(&rank, &piv);
  for (auto p : piv)
    if (p == m.cols()) return std::nullopt;  // pivot in the augmented column
  RVector x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, m.cols());
  return x;
}

bool member(const RVector& v, const Subspace& s) { return s.contains(v); }

bool equal(const Subspace& s, const Subspace& t) { return s == t; }

Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<RVector> gens = s.basis();
  gens.insert(gens.end(), t.basis().begin(), t.basis().end());
  return Subspace::span(s.ambient_dim(), gens);
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  const std::size_t d = s.ambient_dim();
  const std::size_t ks = s.dim(), kt = t.dim();
  if (ks == 0 || kt == 0) return Subspace::zero(d);
  // solve sum a_i s_i - sum b_j t_j = 0; read intersection vectors off the a-part
  RMatrix m(d, ks + kt);
  for (std::size_t j = 0; j < ks; ++j)
    for (std::size_t i = 0; i < d; ++i) m.at(i, j) = s.basis()[j][i];
  for (std::size_t j = 0; j < kt; ++j)
    for (std::size_t i = 0; i < d; ++i) m.at(i, ks + j) = -t.basis()[j][i];
  Subspace k = kernel_basis(m);
  std::vector<RVector> gens;
  for (const auto& coef : k.basis()) {
    RVector v(d);
    for (std::size_t j = 0; j < ks; ++j)
      if (!coef[j].is_zero()) v = add(v, scale(coef[j], s.basis()[j]));
    gens.push_back(std::move(v));
  }
  return Subspace::span(d, gens);
}

}  // namespace homnlie
