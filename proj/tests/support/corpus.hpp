#pragma once

// In-code builders for the algebras exercised throughout the test suite.

#include "homnlie/algebra.hpp"

namespace homnlie::testsupport {

inline RMatrix mat4(std::initializer_list<std::initializer_list<Rational>> rows) {
  RMatrix m(4, 4);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

/// 4-dimensional Lie algebra [e1,e2]=e2, [e3,e4]=e4 with identity twist.
inline HomNLieAlgebra base_lie4() {
  VectorTensor b(2, 4);
  b.set({1, 2}, unit_vector(4, 2));
  b.set({3, 4}, unit_vector(4, 4));
  return HomNLieAlgebra("A1-base", 4, 2, std::move(b), {RMatrix::identity(4)}, true);
}

/// The endomorphism family with nonzero (b, d): columns are images.
inline RMatrix alpha1(Rational a, Rational b, Rational c, Rational d) {
  return mat4({{0, 0, 1, 0}, {0, 0, c, d}, {1, 0, 0, 0}, {a, b, 0, 0}});
}

/// Twisted algebra with bracket (e1,e2) -> b e4, (e3,e4) -> d e2.
inline HomNLieAlgebra example1(Rational a, Rational b, Rational c, Rational d) {
  VectorTensor t(2, 4);
  t.set({1, 2}, scale(b, unit_vector(4, 4)));
  t.set({3, 4}, scale(d, unit_vector(4, 2)));
  return HomNLieAlgebra("A1", 4, 2, std::move(t), {alpha1(a, b, c, d)}, true);
}

/// Second endomorphism family (a, d nonzero, a != 1).
inline RMatrix alpha2(Rational a, Rational b, Rational c, Rational d, Rational e) {
  return mat4({{a, 0, e, 0}, {b, 0, b * e / a, 0}, {1, 0, 0, 0}, {c, d, 0, 0}});
}

/// Twisted algebra with bracket (e1,e2) -> d e4 only.
inline HomNLieAlgebra example2(Rational a, Rational b, Rational c, Rational d, Rational e) {
  VectorTensor t(2, 4);
  t.set({1, 2}, scale(d, unit_vector(4, 4)));
  return HomNLieAlgebra("A2", 4, 2, std::move(t), {alpha2(a, b, c, d, e)}, true);
}

/// Zero bracket in dimension 3 with a non-identity endomorphism.
inline HomNLieAlgebra zero3() {
  RMatrix a(3, 3);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  a.at(1, 1) = 1;
  a.at(2, 2) = 2;
  return HomNLieAlgebra("zero3", 3, 2, VectorTensor(2, 3), {a}, true);
}

/// Ternary algebra [e1,e2,e3] = e1 on a 3-dimensional space, identity twists.
inline HomNLieAlgebra spanning3() {
  VectorTensor b(3, 3);
  b.set({1, 2, 3}, unit_vector(3, 1));
  return HomNLieAlgebra("e1-span3", 3, 3, std::move(b),
                        {RMatrix::identity(3), RMatrix::identity(3)}, true);
}

/// 3-dimensional Lie algebra [e2,e3] = e2 with identity twist; a source of
/// derivations that fail to transfer to the induced algebra.
inline HomNLieAlgebra b3() {
  VectorTensor b(2, 3);
  b.set({2, 3}, unit_vector(3, 2));
  return HomNLieAlgebra("B3", 3, 2, std::move(b), {RMatrix::identity(3)}, true);
}

/// Binary bracket [e2,e3] = e2 with all twist maps zero; admits the general
/// induction construction with alpha_n = 0.
inline HomNLieAlgebra b3_zero_twists() {
  VectorTensor b(2, 3);
  b.set({2, 3}, unit_vector(3, 2));
  return HomNLieAlgebra("B3-zero-twists", 3, 2, std::move(b), {RMatrix(3, 3)}, false);
}

inline TraceForm tau1() { return TraceForm({Rational(1), Rational(0), Rational(1), Rational(0)}); }
inline TraceForm tau2(Rational a) {
  return TraceForm({Rational(1), Rational(0), Rational(1) - a, Rational(0)});
}

}  // namespace homnlie::testsupport
