#include <doctest.h>

#include "pglca/search.hpp"
#include "support.hpp"

using namespace pglca;
using support::vec;

namespace {

StarterScore reference_score(const std::vector<StarterVector>& vs, const OrbitTable& orbits) {
  const std::optional<StarterVector> v = vs.size() == 2 ? std::optional(vs[1]) : std::nullopt;
  const auto cov = coverage_by_classes(vs[0], v, orbits);
  return {starter_check(vs[0], v, orbits).missing_pairs(), cov.total - cov.covered};
}

}  // namespace

TEST_CASE("incremental scorer matches a full recount") {
  const auto orbits = build_orbit_table(Group::of_order(4));
  std::mt19937_64 rng(8);
  for (int nvec : {1, 2}) {
    std::vector<StarterVector> vs;
    for (int w = 0; w < nvec; ++w) vs.push_back(support::random_vector(rng, 13, 4));
    StarterScorer scorer(vs, orbits);
    std::uniform_int_distribution<int> pos(0, 12), sym(0, 3), which(0, nvec - 1);
    for (int step = 0; step < 200; ++step) {
      const int w = which(rng);
      const int i = pos(rng);
      const auto s = static_cast<Symbol>(sym(rng));
      scorer.set(w, i, s);
      vs[w][i] = s;
      const auto ref = reference_score(vs, orbits);
      CHECK(scorer.score().missing_pairs == ref.missing_pairs);
      CHECK(scorer.score().uncovered == ref.uncovered);
    }
  }
}

TEST_CASE("objective orderings") {
  const StarterScore a{1, 10}, b{2, 5};
  CHECK(better(a, b, Objective::full));
  CHECK(better(b, a, Objective::max_coverage));
  CHECK(same(a, a));
}

TEST_CASE("k=5 search reaches the exhaustive optimum") {
  // A k=5 d-set holds 5 tuples against 13 non-constant orbits, so no vector
  // has an empty residual; the search must still find the best one.
  const auto orbits = build_orbit_table(Group::of_order(3));
  std::size_t best = SIZE_MAX;
  for (int code = 0; code < 243; ++code) {
    StarterVector u(5);
    for (int i = 0, c = code; i < 5; ++i, c /= 3) u[i] = static_cast<Symbol>(c % 3);
    best = std::min(best, starter_check(u, std::nullopt, orbits).missing_pairs());
  }
  CHECK(best == 8);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SearchConfig cfg;
    cfg.k = 5;
    cfg.mode = SearchMode::one_vector;
    cfg.budget = 20000;
    cfg.restarts = 4;
    cfg.seed = seed;
    const auto res = search_starters(cfg, orbits);
    CHECK(res.residual.missing_pairs() == best);
    CHECK(res.score.missing_pairs == best);
    CHECK(res.log.size() == 4);
  }
}

TEST_CASE("search is deterministic and independent of thread count") {
  const auto orbits = build_orbit_table(Group::of_order(3));
  SearchConfig cfg;
  cfg.k = 14;
  cfg.objective = Objective::max_coverage;
  cfg.budget = 20000;
  cfg.restarts = 3;
  cfg.seed = 42;
  const auto a = search_starters(cfg, orbits);
  cfg.threads = 3;
  const auto b = search_starters(cfg, orbits);
  CHECK(a.vectors == b.vectors);
  CHECK(a.coverage.covered == b.coverage.covered);
  CHECK(a.coverage.covered == a.coverage.total - a.score.uncovered);
  cfg.seed = 43;
  CHECK(search_starters(cfg, orbits).vectors != a.vectors);
}

TEST_CASE("search starting from Example 1 keeps it") {
  const auto orbits = build_orbit_table(Group::of_order(3));
  const auto& row = support::table2(30);
  SearchConfig cfg;
  cfg.k = 30;
  cfg.budget = 1000;
  cfg.initial = {vec(row.u), vec(row.v)};
  const auto res = search_starters(cfg, orbits);
  CHECK(res.vectors == cfg.initial);
  CHECK(res.moves == 0);
  CHECK(res.coverage.full());

  cfg.initial = {vec(row.u)};
  CHECK_THROWS(search_starters(cfg, orbits));
  cfg.initial.clear();
  cfg.budget = 0;
  CHECK_THROWS(search_starters(cfg, orbits));
}

TEST_CASE("residual matrix obligations") {
  const Group grp = Group::of_order(3);
  const auto orbits = build_orbit_table(grp);
  const auto& row = support::table2(21);
  const auto residual = starter_check(vec(row.u), vec(row.v), orbits);
  const auto c1 = support::matrix(*row.c1);
  CHECK(residual_matrix_unsatisfied(residual, c1, orbits) == 0);
  CHECK(residual_matrix_unsatisfied(residual, TestingArray(3, 21, 1), orbits) > 0);

  SearchConfig cfg;
  cfg.budget = 400000;
  cfg.restarts = 4;
  cfg.seed = 1;
  const auto found = search_residual_matrix(residual, 9, cfg, orbits);
  CHECK(found.success);
  CHECK(residual_matrix_unsatisfied(residual, found.matrix, orbits) == found.unsatisfied);
  if (found.success)
    CHECK(is_covering_array(assemble(vec(row.u), vec(row.v), found.matrix, grp)).valid);

  const auto none = search_residual_matrix(residual, 0, cfg, orbits);
  CHECK_FALSE(none.success);
  const auto empty = starter_check(vec(support::table2(30).u), vec(support::table2(30).v), orbits);
  CHECK(search_residual_matrix(empty, 0, cfg, orbits).success);
}

TEST_CASE("extension search") {
  const auto orbits = build_orbit_table(Group::of_order(3));
  const auto& r32 = support::table2(32);
  const auto found = search_extension(vec(r32.u), vec(r32.v), orbits);
  REQUIRE_FALSE(found.empty());
  for (const auto& c : found) CHECK(c.passes);
  CHECK(search_extension(vec("0000000"), vec("0000000"), orbits).empty());
}
