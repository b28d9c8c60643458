#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pglca/orbit.hpp"

namespace pglca {

using StarterVector = std::vector<Symbol>;

class DegreeTooSmall : public std::invalid_argument {
 public:
  DegreeTooSmall(int k, int minimum);
};

/// Class [x,y,z] of row 4-subsets {i, i+x, i+x+y, i+x+y+z} (mod k) under
/// cyclic shift. The fourth gap is w = k - x - y - z.
struct EquivClass {
  int x = 0;
  int y = 0;
  int z = 0;
  std::size_t size = 0;

  int w(int k) const { return k - x - y - z; }
  /// Row offsets of the member starting at row 0, in reading order.
  std::array<int, 4> offsets() const { return {0, x, x + y, x + y + z}; }
  friend bool operator==(const EquivClass& l, const EquivClass& r) {
    return l.x == r.x && l.y == r.y && l.z == r.z;
  }
  friend auto operator<=>(const EquivClass& l, const EquivClass& r) {
    return std::array{l.x, l.y, l.z} <=> std::array{r.x, r.y, r.z};
  }
};

/// Class of 4-subsets {t, t+x, t+x+y, k-1} (t mod k-1) that contain the fixed
/// last row. (x, y, k-1-x-y) is the lexicographically least rotation of the
/// cyclic gap vector of the three moving rows.
struct FixedRowClass {
  int x = 0;
  int y = 0;
  std::size_t size = 0;

  std::array<int, 3> offsets() const { return {0, x, x + y}; }
  friend bool operator==(const FixedRowClass& l, const FixedRowClass& r) {
    return l.x == r.x && l.y == r.y;
  }
};

std::vector<EquivClass> enumerate_classes(int k);
std::size_t class_size(int k, const EquivClass& cls);
/// Canonical class of a 4-subset of distinct rows in 0..k-1.
EquivClass class_of(std::array<int, 4> subset, int k);
/// Every distinct member subset (sorted rows), ordered by start row.
std::vector<std::array<int, 4>> class_members(int k, const EquivClass& cls);

/// Tuples (u_i, u_{i+x}, u_{i+x+y}, u_{i+x+y+z}) for i = 0..k-1, followed by
/// the same for v when given.
std::vector<Tuple4> d_set(const StarterVector& u, const std::optional<StarterVector>& v,
                          const EquivClass& cls);

std::vector<FixedRowClass> enumerate_fixed_row_classes(int k);
FixedRowClass fixed_row_class_of(std::array<int, 3> moving_rows, int k);
/// Member 4-subsets (sorted, last element k-1) of a fixed-row class.
std::vector<std::array<int, 4>> fixed_row_members(int k, const FixedRowClass& cls);

/// Tuples (u_t, u_{t+x}, u_{t+x+y}, s) over t mod k-1 for a length-(k-1)
/// vector `u` extended by the fixed symbol `s`.
std::vector<Tuple4> fixed_row_d_set(const StarterVector& u, Symbol s, const FixedRowClass& cls);

}  // namespace pglca
