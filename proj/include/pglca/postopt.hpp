#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pglca/array.hpp"

namespace pglca {

class NotACoveringArray : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Entries marked flexible can all be replaced by arbitrary symbols at once
/// and the array stays a 4-CA: every obligation is met by a column whose four
/// entries on that row subset are all unmarked.
struct FlexState {
  TestingArray array;
  std::vector<std::uint8_t> flexible;  // row-major, like the array
  std::uint64_t seed = 0;

  bool is_flexible(int row, int col) const {
    return flexible[static_cast<std::size_t>(row) * array.columns() + col] != 0;
  }
  std::size_t flexible_count() const;
};

/// Greedy marking: columns in random order, rows within a column in random
/// order, an entry is freed when each obligation it helps meet is met twice.
FlexState mark_flexible(const TestingArray& a, std::uint64_t seed);

struct PostoptStats {
  std::uint64_t attempts = 0;  // rounds run
  int removed = 0;             // columns deleted
  int remarks = 0;             // rounds that ended in a scramble instead of a deletion
};

/// Runs `budget` rounds. A round fixes all entries, marks flexibility with the
/// most flexible column first, frees the rest of that column where other
/// columns' flexible entries can take over its unique tuples, and deletes any
/// column left entirely flexible. Otherwise the remaining flexible entries get
/// random symbols before the next round. Output verifies as a 4-CA.
TestingArray post_optimize(const TestingArray& a, std::uint64_t budget, std::uint64_t seed,
                           PostoptStats* stats = nullptr);

}  // namespace pglca
