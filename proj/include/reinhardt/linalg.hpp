#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "reinhardt/scalar.hpp"

namespace reinhardt {

/// Dense row-major matrix over the scalar field.
using Matrix = std::vector<ExponentVector>;
using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<size_t> rref(Matrix& m, size_t cols);
size_t rank(Matrix m, size_t cols);

/// Basis of {y : m y = 0}, one vector per free column, normalized to a 1 in that column.
/// Rational vectors are rescaled to primitive integer vectors.
std::vector<ExponentVector> kernel_basis(const Matrix& m, size_t cols);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);
Matrix transpose(const Matrix& m, size_t cols);

/// Scales a rational vector to the primitive integer vector with the same direction.
/// Quadratic vectors are returned unchanged.
ExponentVector primitive(const ExponentVector& v);

/// Row vector times matrix: (v m)_j = sum_l v_l m[l][j].
ExponentVector row_times(const ExponentVector& v, const Matrix& m);

/// Integer basis of the lattice {y in Z^cols : m y = 0}, computed by unimodular
/// column reduction of m to column Hermite form. The basis has full lattice rank.
IntMatrix integer_kernel(IntMatrix m, size_t cols);

}  // namespace reinhardt
