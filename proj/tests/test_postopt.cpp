#include <doctest.h>

#include "pglca/postopt.hpp"
#include "pglca/verifier.hpp"
#include "support.hpp"

using namespace pglca;

namespace {

TestingArray exhaustive_k4(int g) {
  TestingArray a(g, 4, g * g * g * g);
  for (int c = 0; c < a.columns(); ++c) {
    const auto t = unpack_tuple(static_cast<std::uint32_t>(c), g);
    for (int r = 0; r < 4; ++r) a.at(r, c) = t[r];
  }
  return a;
}

TestingArray example2() { return support::assemble_row(support::table2(21), Group::of_order(3)); }

}  // namespace

TEST_CASE("exactly-once coverage leaves nothing flexible") {
  const auto a = exhaustive_k4(3);
  const auto flex = mark_flexible(a, 1);
  CHECK(flex.flexible_count() == 0);
  CHECK(post_optimize(a, 50, 1).columns() == 81);
}

TEST_CASE("a duplicated column becomes entirely flexible") {
  auto a = exhaustive_k4(3);
  const int dup = 40;
  a.append(a.select_columns({dup}));
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto flex = mark_flexible(a, seed);
    CHECK(flex.flexible_count() == 4);
    int full_columns = 0;
    for (int c : {dup, 81}) {
      int count = 0;
      for (int r = 0; r < 4; ++r) count += flex.is_flexible(r, c);
      full_columns += count == 4;
    }
    CHECK(full_columns == 1);
    CHECK(post_optimize(a, 10, seed).columns() == 81);
  }
}

TEST_CASE("flexible entries can all be rewritten at once") {
  const auto a = example2();
  std::mt19937_64 rng(2);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto flex = mark_flexible(a, seed);
    CHECK(flex.flexible_count() > 0);
    auto b = a;
    std::uniform_int_distribution<int> sym(0, 2);
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.columns(); ++c)
        if (flex.is_flexible(r, c)) b.at(r, c) = static_cast<Symbol>(sym(rng));
    CHECK(is_covering_array(b).valid);
  }
}

TEST_CASE("post-optimization keeps a covering array and never grows it") {
  const auto a = example2();
  REQUIRE(a.columns() == 309);
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    PostoptStats stats;
    const auto out = post_optimize(a, 60, seed, &stats);
    CHECK(out.columns() <= a.columns());
    CHECK(out.columns() == a.columns() - stats.removed);
    CHECK(is_covering_array(out).valid);
    CHECK(stats.attempts <= 60);
  }
}

TEST_CASE("invalid input is rejected") {
  auto a = exhaustive_k4(3);
  const auto broken = a.select_columns({0, 1, 2});
  CHECK_THROWS_AS(mark_flexible(broken, 0), NotACoveringArray);
  CHECK_THROWS_AS(post_optimize(broken, 5, 0), NotACoveringArray);
}
