#pragma once

#include <stdexcept>
#include <string>

#include "homnlie/algebra.hpp"
#include "homnlie/skew_tensor.hpp"

namespace homnlie {

/// Malformed input; message carries the offending field or line.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Algebra document: JSON object with dimension, arity, multiplicative flag,
/// "alpha" (one matrix) or "twists" (arity-1 matrices), and a sparse bracket
/// table keyed by strictly increasing comma-joined 1-based indices. Matrices
/// are row-major with column j holding the image of basis vector j; every
/// coefficient uses the Rational text grammar.
HomNLieAlgebra parse_algebra_text(const std::string& text);
HomNLieAlgebra parse_algebra_file(const std::string& path);
std::string emit_algebra(const HomNLieAlgebra& alg);

TraceForm parse_trace_text(const std::string& text, int expected_dim);
TraceForm parse_trace_file(const std::string& path, int expected_dim);
std::string emit_trace(const TraceForm& tau);

/// Scalar degree-2 cochain document: {"degree":2, "coefficients":"scalar",
/// "values": {"i1,...,in": coeff}}.
ScalarTensor parse_scalar_cochain_text(const std::string& text, int arity, int dim);
ScalarTensor parse_scalar_cochain_file(const std::string& path, int arity, int dim);
std::string emit_scalar_cochain(const ScalarTensor& t);

/// Adjoint degree-2 cochain document: values map tuples to sparse vectors.
VectorTensor parse_adjoint_cochain_text(const std::string& text, int arity, int dim);
VectorTensor parse_adjoint_cochain_file(const std::string& path, int arity, int dim);

/// Linear form on A + K c: d+1 coefficients.
RVector parse_lambda_text(const std::string& text, int expected_len);
RVector parse_lambda_file(const std::string& path, int expected_len);

std::string read_file(const std::string& path);

}  // namespace homnlie
