#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphjac/bigint.hpp"
#include "graphjac/matrix.hpp"

namespace graphjac {

/// Exact determinant by fraction-free (Bareiss) elimination. Rows whose
/// pivot-column entry is already zero are rescaled lazily, so banded inputs
/// such as Laplacian minors of sparse graphs cost O(n^2) rather than O(n^3).
Integer determinant(const IntegerMatrix& a);

std::size_t rank(const IntegerMatrix& a);

/// A^{-1} == numerators / denominator with denominator > 0. The denominator is
/// |det A|, so `numerators` is the adjugate up to sign.
struct ScaledInverse {
  IntegerMatrix numerators;
  Integer denominator;
  Integer determinant;

  RationalMatrix to_rational() const;
};

ScaledInverse invert_scaled(const IntegerMatrix& a);
RationalMatrix invert(const IntegerMatrix& a);
RationalMatrix invert(const RationalMatrix& a);

/// U * A * V == D with U, V unimodular and D diagonal, d_0 | d_1 | ...,
/// every d_i >= 0 (zeros last).
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Some integer x with A x == b, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntegerMatrix& a,
                                       const IntVector& b);
std::optional<IntVector> solve_integer(const SmithDecomposition& snf,
                                       const IntVector& b);

/// Order of b + im(A) in the cokernel Z^rows / A Z^cols; 0 if b has infinite
/// order.
Integer cokernel_order(const SmithDecomposition& snf, const IntVector& b);

}  // namespace graphjac
