#pragma once

#include <optional>
#include <vector>

#include "tmsv/rational.hpp"

namespace tmsv {

// Dense exact-rational matrix, row major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<QVec>& rows);
  static Matrix from_cols(const std::vector<QVec>& cols);

  Matrix transposed() const;
  bool is_zero() const;
};

Matrix operator*(const Matrix& x, const Matrix& y);

// Rank over the rationals; exact Gauss elimination, pivot = first row with a
// nonzero entry in the current column (deterministic).
int rank(const Matrix& m);

// Basis of the right null space {v : m v = 0}; size = cols - rank.
std::vector<QVec> kernel_basis(const Matrix& m);

// Basis of the span of the given vectors (deterministic echelon basis).
std::vector<QVec> span_basis(const std::vector<QVec>& vectors);

// Basis of the sum of the spans of several generating families. All vectors
// must share one ambient dimension.
std::vector<QVec> subspace_sum_basis(
    const std::vector<std::vector<QVec>>& generating_families);

// Unique solution x of (basis columns) x = target, when target lies in the
// span of `basis`; nullopt otherwise.
std::optional<QVec> solve_in_span(const std::vector<QVec>& basis,
                                  const QVec& target);

// Coordinates of each column of `vectors` in `basis`; throws if some vector
// leaves the span.
Matrix coords_in_basis(const std::vector<QVec>& basis,
                       const std::vector<QVec>& vectors);

// Coordinates not hit by a leading entry of the echelon family: the standard
// basis vectors at these positions represent a basis of the quotient space.
std::vector<int> nonpivot_coords(const std::vector<QVec>& echelon, int dim);

// Coordinates of v in that quotient basis, modulo the echelon span.
QVec quotient_coords(const std::vector<QVec>& echelon,
                     const std::vector<int>& nonpivot, const QVec& v);

}  // namespace tmsv
