#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "pglca/orbit.hpp"
#include "published.hpp"

using namespace pglca;

namespace {

std::vector<std::uint32_t> codes_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::uint32_t> out;
  std::string tok;
  while (is >> tok) {
    const auto s = parse_symbols(tok, 3);
    out.push_back(pack_tuple({s[0], s[1], s[2], s[3]}, 3));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("g=3 orbits match the printed listing") {
  const auto table = build_orbit_table(Group::of_order(3));
  REQUIRE(table.orbit_count() == 14);
  for (int id = 0; id < 14; ++id) {
    const int number = g3_numbering::listing(id, table);
    CAPTURE(number);
    CHECK(table.orbit(id).members == codes_of(published::kOrbitListing[number - 1]));
    CHECK(g3_numbering::residual(id, table) == number - 1);
    CHECK(g3_numbering::id_from_residual(number - 1, table) == id);
  }
}

TEST_CASE("orbit census for every supported g") {
  for (int g : {3, 4, 5, 6, 8, 9, 10}) {
    CAPTURE(g);
    const auto grp = Group::of_order(g);
    const auto table = build_orbit_table(grp);
    CHECK(table.orbit_count() == static_cast<std::size_t>(g + 11));
    std::size_t total = 0;
    for (const auto& o : table.orbits()) total += o.size();
    CHECK(total == static_cast<std::size_t>(g * g * g * g));
    CHECK(table.orbit(0).constant);
    CHECK(table.orbit(0).size() == static_cast<std::size_t>(g));
    for (std::size_t id = 1; id < table.orbit_count(); ++id) {
      CHECK_FALSE(table.orbit(static_cast<int>(id)).constant);
      CHECK(table.orbit(static_cast<int>(id - 1)).members.front() <
            table.orbit(static_cast<int>(id)).members.front());
    }
    // Invariance under every group element.
    for (std::uint32_t code = 0; code < static_cast<std::uint32_t>(g * g * g * g); code += 3) {
      const Tuple4 t = unpack_tuple(code, g);
      for (std::size_t e = 0; e < grp.order(); e += 5) {
        const auto& el = grp.elements()[e];
        CHECK(table.id_of({el(t[0]), el(t[1]), el(t[2]), el(t[3])}) == table.id_of(t));
      }
    }
  }
}

TEST_CASE("dump lists one orbit per line") {
  const auto table = build_orbit_table(Group::of_order(3));
  const std::string text = table.dump();
  CHECK(std::count(text.begin(), text.end(), '\n') == 14);
  CHECK(text.rfind("0000 1111 ****\n", 0) == 0);
  CHECK(tuple_string({0, 1, 2, 2}, 3) == "01**");
  CHECK_THROWS(g3_numbering::listing(0, build_orbit_table(Group::of_order(4))));
}
