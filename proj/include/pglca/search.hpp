#pragma once

#include <cstdint>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pglca/builder.hpp"
#include "pglca/verifier.hpp"

namespace pglca {

enum class SearchMode { one_vector, two_vector };
enum class Objective { full, max_coverage };

struct SearchConfig {
  int k = 0;
  int g = 3;
  SearchMode mode = SearchMode::two_vector;
  Objective objective = Objective::full;
  /// Total move evaluations, shared evenly by the restarts.
  std::uint64_t budget = 100000;
  int restarts = 1;
  std::uint64_t seed = 0;
  /// Consecutive sideways (equal objective) moves accepted before only
  /// strict improvements are taken.
  int plateau_cap = 2000;
  bool include_constants = true;
  unsigned threads = 1;
  /// Starting point for restart 0; the other restarts start at random.
  std::vector<StarterVector> initial;
};

/// Objective value of a starter set. `missing_pairs` counts (class, orbit)
/// pairs absent from the d-sets; `uncovered` is the number of (row subset,
/// tuple) obligations the assembled array misses.
struct StarterScore {
  std::uint64_t missing_pairs = 0;
  std::uint64_t uncovered = 0;
};

/// Orders scores for the configured objective: `full` compares missing pairs
/// first, `max_coverage` compares uncovered obligations first.
bool better(const StarterScore& a, const StarterScore& b, Objective objective);
bool same(const StarterScore& a, const StarterScore& b);

/// Per-class orbit-presence counters for one or two starter vectors, updated
/// incrementally when a single coordinate changes.
class StarterScorer {
 public:
  StarterScorer(std::vector<StarterVector> vectors, const OrbitTable& orbits,
                bool include_constants = true);

  const StarterScore& score() const { return score_; }
  const std::vector<StarterVector>& vectors() const { return vectors_; }
  void set(int vector, int position, Symbol symbol);

 private:
  void account(int vector, int position, int delta);
  void bump(std::size_t slot, bool now_present);

  std::vector<StarterVector> vectors_;
  std::vector<StarterVector> doubled_;  // each vector written twice, so no index wraps
  int k_;
  int g_;
  std::size_t orbit_count_;
  std::vector<std::array<int, 4>> offsets_;
  std::vector<std::uint64_t> weight_;     // class * orbit_count + orbit; 0 when it never counts
  std::vector<std::uint8_t> pair_;        // 1 for non-constant orbits
  std::vector<std::uint32_t> counts_;     // class * orbit_count + orbit
  std::span<const std::uint16_t> lookup_;
  StarterScore score_;
};

struct SearchResult {
  std::vector<StarterVector> vectors;
  StarterScore score;
  ResidualReport residual;
  CoverageResult coverage;  // of the assembled array, from the class formula
  std::uint64_t moves = 0;
  int best_restart = 0;
  std::vector<std::string> log;  // one line per restart
};

/// First-improvement hill climbing with random restarts over single
/// coordinate changes. Deterministic for a fixed config.
SearchResult search_starters(const SearchConfig& cfg, const OrbitTable& orbits);

struct ResidualMatrixResult {
  TestingArray matrix;
  bool success = false;
  std::size_t unsatisfied = 0;  // obligations left uncovered by the best matrix
  std::uint64_t moves = 0;
};

/// Obligations a C1 block must meet: for every member start i of each
/// deficient class and each missing orbit, some column of C1 read on rows
/// (i, i+x, i+x+y, i+x+y+z) lies in that orbit.
std::size_t residual_matrix_unsatisfied(const ResidualReport& residual, const TestingArray& c1,
                                        const OrbitTable& orbits);

ResidualMatrixResult search_residual_matrix(const ResidualReport& residual, int width,
                                            const SearchConfig& cfg, const OrbitTable& orbits);

/// Fixed last-row placements that extend length-(k-1) starters to degree k.
std::vector<ExtensionCandidate> search_extension(const StarterVector& u,
                                                 const std::optional<StarterVector>& v,
                                                 const OrbitTable& orbits);

}  // namespace pglca
