#pragma once

// Exact dense linear algebra over Z, Q and the Scalar field.

#include <vector>

#include "tropjac/arith.hpp"

namespace tropjac {

template <class T>
using Matrix = std::vector<std::vector<T>>;

std::size_t rank(Matrix<Rational> m);

/// Bareiss determinant of a square integer matrix.
BigInt determinant(Matrix<BigInt> m);

/// U * A * V = D with U, V unimodular and D diagonal with
/// d_1 | d_2 | ... (all d_i >= 0).
struct SmithForm {
  Matrix<BigInt> U;
  Matrix<BigInt> V;
  Matrix<BigInt> D;
  std::vector<BigInt> diagonal;
};

SmithForm smith_normal_form(const Matrix<BigInt>& a);

Matrix<BigInt> multiply(const Matrix<BigInt>& a, const Matrix<BigInt>& b);

/// Solves A x = b for square nonsingular A. Constant systems use rational
/// elimination; otherwise rows are cleared to polynomials and solved by
/// fraction-free elimination with exact division. Throws Internal if A is
/// singular.
std::vector<Scalar> solve(const Matrix<Scalar>& a, const std::vector<Scalar>& b);

}  // namespace tropjac
