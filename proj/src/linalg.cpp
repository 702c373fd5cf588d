#include "gtz/linalg.hpp"

#include <cassert>

namespace gtz::detail {

int rref(QMatrix& m, std::vector<int>* pivots) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivots) pivots->push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

QMatrix nullspace_basis(QMatrix m, std::size_t cols) {
  for (auto& row : m) assert(row.size() == cols);
  std::vector<int> pivots;
  const int rank = rref(m, &pivots);

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  QMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QRow v(cols, Rational(0));
    v[f] = 1;
    for (int r = 0; r < rank; ++r) {
      const std::size_t p = static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)]);
      v[p] = -m[static_cast<std::size_t>(r)][f];
    }
    basis.push_back(std::move(v));
  }
  // Normalize the basis itself so downstream output is canonical.
  rref(basis);
  return basis;
}

}  // namespace gtz::detail
