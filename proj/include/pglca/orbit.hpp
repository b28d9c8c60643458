#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pglca/group.hpp"

namespace pglca {

using Tuple4 = std::array<Symbol, 4>;

/// Base-g packing of a 4-tuple, first coordinate most significant.
inline std::uint32_t pack_tuple(const Tuple4& t, int g) {
  return ((static_cast<std::uint32_t>(t[0]) * g + t[1]) * g + t[2]) * g + t[3];
}
Tuple4 unpack_tuple(std::uint32_t code, int g);

/// Partition of all g^4 4-tuples into orbits of PGL(2,g-1) acting on every
/// coordinate at once. Ids follow the order of canonical (least) representatives,
/// so the constant orbit is id 0.
class OrbitTable {
 public:
  struct Orbit {
    Tuple4 representative;
    std::vector<std::uint32_t> members;  // packed codes, ascending
    bool constant = false;
    std::size_t size() const { return members.size(); }
  };

  int symbol_count() const { return g_; }
  std::size_t orbit_count() const { return orbits_.size(); }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  const Orbit& orbit(int id) const { return orbits_[id]; }
  int constant_orbit_id() const { return 0; }

  int id_of(const Tuple4& t) const { return orbit_of_[pack_tuple(t, g_)]; }
  int id_of_code(std::uint32_t code) const { return orbit_of_[code]; }
  std::span<const std::uint16_t> lookup() const { return orbit_of_; }

  /// One orbit per line, members in ascending order (representative first),
  /// 4-symbol tokens separated by spaces.
  std::string dump() const;

 private:
  friend OrbitTable build_orbit_table(const Group& group);
  int g_ = 0;
  std::vector<std::uint16_t> orbit_of_;
  std::vector<Orbit> orbits_;
};

OrbitTable build_orbit_table(const Group& group);

int orbit_id_of(const Tuple4& t, const OrbitTable& table);

std::string tuple_string(const Tuple4& t, int g);

/// Conventional g = 3 orbit numbers, translated from canonical ids.
/// `listing` numbers the explicit orbit listing (1..14, constant orbit = 1);
/// `residual` is the numbering of the per-class missing-orbit table, which
/// runs one lower (constant orbit = 0).
namespace g3_numbering {
int listing(int orbit_id, const OrbitTable& table);
int residual(int orbit_id, const OrbitTable& table);
int id_from_residual(int number, const OrbitTable& table);
}  // namespace g3_numbering

}  // namespace pglca
