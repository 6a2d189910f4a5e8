#pragma once

#include <cstddef>
#include <vector>

#include "glres/matrix.hpp"

namespace glres {

using RatVector = std::vector<Rational>;

struct EchelonForm {
  Matrix<mpz_class> upper;           // integer row echelon form, rank rows kept
  std::vector<std::size_t> pivots;  // pivot column of each kept row
  int swap_sign = 1;
};

// Fraction-free (Bareiss) forward elimination. Rows are first scaled to
// integers; every intermediate entry is a minor of the scaled matrix.
EchelonForm fraction_free_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::vector<RatVector> kernel_basis(const RatMatrix& m);
Rational determinant(const RatMatrix& m);

struct DetAdj {
  Rational det;
  RatMatrix adj;
};
DetAdj det_and_adjugate(const RatMatrix& m);

// Solves m*x = b for square invertible m (Gauss-Jordan over Q).
RatMatrix solve(const RatMatrix& m, const RatMatrix& b);

// Columns of `cols` as a matrix; every vector must have the same length.
RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t length);

}  // namespace glres
