#pragma once

// Dense exact linear algebra over Q. Matrices are small (dimension <= 5 in
// practice), so everything is plain Gaussian elimination on row vectors.

#include <optional>
#include <vector>

#include "okdh/rational.hpp"

namespace okdh {

using RationalMatrix = std::vector<RationalVector>;
using IntegerMatrix = std::vector<IntegerVector>;

struct EchelonForm {
  RationalMatrix rows;               // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

EchelonForm reduced_row_echelon(RationalMatrix m, std::size_t cols);

std::size_t rank(const RationalMatrix& m, std::size_t cols);

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(const std::vector<RationalVector>& points);

Rational determinant(RationalMatrix m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

/// Basis of {x : m x = 0}.
std::vector<RationalVector> nullspace(const RationalMatrix& m, std::size_t cols);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

RationalMatrix transpose(const RationalMatrix& m);
RationalVector multiply(const RationalMatrix& m, const RationalVector& x);
RationalMatrix to_rational(const IntegerMatrix& m);
IntegerMatrix identity_integer(std::size_t n);

}  // namespace okdh
