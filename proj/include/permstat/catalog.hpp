#pragma once

// Named patterns shared by the identity, shallowness and verification code.

#include "permstat/pattern.hpp"

namespace permstat::catalog {

inline VincularPattern vincular(std::string_view text) { return parse_vincular(text); }
inline ArrowPattern arrow(std::string_view text) { return parse_arrow(text); }

/// (12,1>2): an ascent xy of tau with sigma(x) = y.
inline ArrowPattern arrow_ascent() { return arrow("(12,1>2)"); }
/// (1-23,1>4)
inline ArrowPattern arrow_1_23() { return arrow("(1-23,1>4)"); }
/// (2-13,2>4)
inline ArrowPattern arrow_2_13() { return arrow("(2-13,2>4)"); }

namespace detail {
inline std::vector<Cell> bond_columns() {
  std::vector<Cell> cells;
  for (int row = 0; row <= 4; ++row) {
    cells.push_back({1, row});
    cells.push_back({3, row});
  }
  return cells;
}
inline std::vector<Cell> bond_columns_with_left_top() {
  auto cells = bond_columns();
  cells.push_back({0, 3});
  cells.push_back({0, 4});
  return cells;
}
}  // namespace detail

// Full columns 1 and 3 force the two bonds of 14-23 / 24-13; the extra cells
// (0,3),(0,4) forbid a letter left of the occurrence above its third value.
// (1-23,1>4) = mesh_1423() - mesh_1423_capped(); likewise for 2413.
inline MeshPattern mesh_1423() { return {{1, 4, 2, 3}, detail::bond_columns()}; }
inline MeshPattern mesh_1423_capped() {
  return {{1, 4, 2, 3}, detail::bond_columns_with_left_top()};
}
inline MeshPattern mesh_2413() { return {{2, 4, 1, 3}, detail::bond_columns()}; }
inline MeshPattern mesh_2413_capped() {
  return {{2, 4, 1, 3}, detail::bond_columns_with_left_top()};
}

}  // namespace permstat::catalog
