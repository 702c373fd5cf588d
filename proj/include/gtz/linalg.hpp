#pragma once

#include <vector>

#include "gtz/rational.hpp"

namespace gtz::detail {

// Dense exact linear algebra over the rationals, just enough for span ranks
// and nullspaces of the small weight-graded blocks this project produces.

using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;

// In-place reduced row echelon form. Returns the rank; pivot column indices
// (ascending) are appended to *pivots when given. Rows must share one width.
int rref(QMatrix& m, std::vector<int>* pivots = nullptr);

// Canonical basis of {x : m x = 0} for an r x cols matrix, one basis vector
// per row of the result, itself in reduced row echelon form so the output is
// independent of row order and scaling of the input.
QMatrix nullspace_basis(QMatrix m, std::size_t cols);

}  // namespace gtz::detail
