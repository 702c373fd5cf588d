#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gtz {

// Variable universe of the two restriction problems.
//
// Z variables z[row,col] are the matrix entries the polynomials live on.
// U/V are the transformed variables of the odd-orthogonal problem, X/Y the
// analogous ones of the general-linear problem; each carries one negative
// index. U/V/X/Y appear only as substitution sources when expanding claimed
// basis monomials; kernel computations run entirely in Z variables.
enum class VarKind : std::uint8_t { Z = 0, U = 1, V = 2, X = 3, Y = 4 };

struct VarId {
  VarKind kind{VarKind::Z};
  std::int16_t row{0};  // Z: row index; U/V/X/Y: the single index
  std::int16_t col{0};  // Z only, 0 otherwise

  static VarId z(int row, int col) {
    return VarId{VarKind::Z, static_cast<std::int16_t>(row), static_cast<std::int16_t>(col)};
  }
  static VarId u(int index) { return VarId{VarKind::U, static_cast<std::int16_t>(index), 0}; }
  static VarId v(int index) { return VarId{VarKind::V, static_cast<std::int16_t>(index), 0}; }
  static VarId x(int index) { return VarId{VarKind::X, static_cast<std::int16_t>(index), 0}; }
  static VarId y(int index) { return VarId{VarKind::Y, static_cast<std::int16_t>(index), 0}; }

  // Canonical variable order: kind, then row, then column.
  friend auto operator<=>(const VarId&, const VarId&) = default;

  std::string str() const {
    switch (kind) {
      case VarKind::Z:
        return "z[" + std::to_string(row) + "," + std::to_string(col) + "]";
      case VarKind::U:
        return "u[" + std::to_string(row) + "]";
      case VarKind::V:
        return "v[" + std::to_string(row) + "]";
      case VarKind::X:
        return "x[" + std::to_string(row) + "]";
      case VarKind::Y:
        return "y[" + std::to_string(row) + "]";
    }
    return "?";
  }
};

}  // namespace gtz
