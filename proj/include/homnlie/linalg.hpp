#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "homnlie/rational.hpp"

namespace homnlie {

/// Coordinate vector over the rationals.
using RVector = std::vector<Rational>;

RVector zero_vector(std::size_t dim);
RVector unit_vector(std::size_t dim, std::size_t one_based_index);
bool is_zero_vector(const RVector& v);
RVector add(const RVector& a, const RVector& b);
RVector sub(const RVector& a, const RVector& b);
RVector scale(const Rational& c, const RVector& v);
Rational dot(const RVector& a, const RVector& b);

/// Dense rational matrix, row-major. Column j holds the image of basis
/// vector j whenever the matrix represents a linear map.
class RMatrix {
public:
  RMatrix() : rows_(0), cols_(0) {}
  RMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RMatrix identity(std::size_t n);
  static RMatrix from_rows(const std::vector<RVector>& rows);
  static RMatrix from_columns(const std::vector<RVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RVector row(std::size_t i) const;
  RVector column(std::size_t j) const;

  RMatrix transpose() const;
  RMatrix operator*(const RMatrix& o) const;
  RMatrix operator+(const RMatrix& o) const;
  RMatrix operator-(const RMatrix& o) const;
  RVector apply(const RVector& v) const;
  RMatrix pow(unsigned k) const;

  bool operator==(const RMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RMatrix& o) const { return !(*this == o); }

  bool is_zero() const;

  /// Reduced row echelon form; returns rank and, if requested, pivot columns.
  RMatrix rref(std::size_t* rank = nullptr, std::vector<std::size_t>* pivots = nullptr) const;

  Rational determinant() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Rational column-span with a canonical reduced-echelon basis, so equal
/// subspaces compare equal as plain data.
class Subspace {
public:
  Subspace() = default;  // the zero space of the zero ambient space

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<RVector>& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RVector>& basis() const { return basis_; }

  bool contains(const RVector& v) const;
  bool includes(const Subspace& other) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  Subspace(std::size_t ambient, std::vector<RVector> basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  std::vector<RVector> basis_;
};

Subspace kernel_basis(const RMatrix& m);
std::pair<Subspace, std::size_t> image_and_rank(const RMatrix& m);

/// Some particular solution of M x = b, or nullopt when inconsistent.
/// Free variables are set to zero, so a homogeneous system yields 0.
std::optional<RVector> solve(const RMatrix& m, const RVector& b);

bool member(const RVector& v, const Subspace& s);
bool equal(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

}  // namespace homnlie
