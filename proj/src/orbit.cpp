#include "pglca/orbit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace pglca {

Tuple4 unpack_tuple(std::uint32_t code, int g) {
  Tuple4 t{};
  for (int i = 3; i >= 0; --i) {
    t[i] = static_cast<Symbol>(code % g);
    code /= g;
  }
  return t;
}

std::string tuple_string(const Tuple4& t, int g) {
  std::string s;
  for (Symbol x : t) s += symbol_char(x, g);
  return s;
}

OrbitTable build_orbit_table(const Group& group) {
  const int g = group.symbol_count();
  const auto total = static_cast<std::uint32_t>(g * g * g * g);
  constexpr auto kUnset = std::numeric_limits<std::uint16_t>::max();

  std::vector<std::uint16_t> provisional(total, kUnset);
  std::vector<std::vector<std::uint32_t>> members;
  // Scanning codes in ascending order means each new orbit is discovered at its
  // least member, so discovery order is already representative order.
  for (std::uint32_t code = 0; code < total; ++code) {
    if (provisional[code] != kUnset) continue;
    const auto id = static_cast<std::uint16_t>(members.size());
    const Tuple4 t = unpack_tuple(code, g);
    std::vector<std::uint32_t> orbit;
    for (const auto& e : group.elements()) {
      const std::uint32_t image = pack_tuple({e(t[0]), e(t[1]), e(t[2]), e(t[3])}, g);
      if (provisional[image] == kUnset) {
        provisional[image] = id;
        orbit.push_back(image);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    members.push_back(std::move(orbit));
  }

  OrbitTable table;
  table.g_ = g;
  table.orbit_of_ = std::move(provisional);
  table.orbits_.reserve(members.size());
  for (auto& m : members) {
    OrbitTable::Orbit o;
    o.representative = unpack_tuple(m.front(), g);
    const auto& r = o.representative;
    o.constant = r[0] == r[1] && r[1] == r[2] && r[2] == r[3];
    o.members = std::move(m);
    table.orbits_.push_back(std::move(o));
  }
  return table;
}

int orbit_id_of(const Tuple4& t, const OrbitTable& table) { return table.id_of(t); }

std::string OrbitTable::dump() const {
  std::string out;
  for (const auto& o : orbits_) {
    for (std::size_t i = 0; i < o.members.size(); ++i) {
      if (i != 0) out += ' ';
      out += tuple_string(unpack_tuple(o.members[i], g_), g_);
    }
    out += '\n';
  }
  return out;
}

namespace g3_numbering {
namespace {

// Canonical representative -> number in the g=3 orbit listing.
constexpr std::pair<const char*, int> kListing[] = {
    {"0000", 1},  {"0001", 2},  {"0111", 3},  {"0100", 4},  {"0010", 5},
    {"0011", 6},  {"0101", 7},  {"0110", 8},  {"001*", 9},  {"010*", 10},
    {"01*0", 11}, {"01*1", 12}, {"01**", 13}, {"011*", 14},
};

void require_g3(const OrbitTable& table) {
  if (table.symbol_count() != 3)
    throw std::invalid_argument("g3 orbit numbering is only defined for g=3");
}

}  // namespace

int listing(int orbit_id, const OrbitTable& table) {
  require_g3(table);
  const std::string rep = tuple_string(table.orbit(orbit_id).representative, 3);
  for (const auto& [r, n] : kListing)
    if (rep == r) return n;
  throw std::logic_error("orbit representative missing from the g=3 listing: " + rep);
}

int residual(int orbit_id, const OrbitTable& table) { return listing(orbit_id, table) - 1; }

int id_from_residual(int number, const OrbitTable& table) {
  require_g3(table);
  for (int id = 0; id < static_cast<int>(table.orbit_count()); ++id)
    if (residual(id, table) == number) return id;
  throw std::invalid_argument("no g=3 orbit numbered " + std::to_string(number));
}

}  // namespace g3_numbering
}  // namespace pglca
