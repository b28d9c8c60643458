#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "pglca/array.hpp"
#include "pglca/classes.hpp"
#include "pglca/orbit.hpp"

namespace pglca {

/// First uncovered obligation: row subset (ascending) and the tuple missing
/// on those rows, read in row order.
struct Witness {
  std::array<int, 4> rows{};
  Tuple4 tuple{};
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CoverageResult {
  int k = 0;
  int g = 0;
  int n = 0;  // columns of the measured array
  std::uint64_t covered = 0;
  std::uint64_t total = 0;  // C(k,4) * g^4
  std::optional<Witness> witness;

  double mu() const { return total == 0 ? 1.0 : static_cast<double>(covered) / total; }
  /// mu rounded half-up to three decimals, computed from the exact ratio.
  double mu_rounded() const;
  bool full() const { return covered == total; }
  /// {"covered":..,"total":..,"mu":0.xyz,"n":..,"k":..,"g":..[,"witness":{..}]}
  std::string to_record() const;
};

struct Verdict {
  bool valid = false;
  std::optional<Witness> witness;
};

/// threads = 0 uses the machine's parallelism. Results do not depend on the
/// thread count.
Verdict is_covering_array(const TestingArray& a, unsigned threads = 1);
CoverageResult coverage_brute(const TestingArray& a, unsigned threads = 1);

/// Coverage of [circ(u)^G (, circ(v)^G) (, C)] from the class decomposition:
/// each class contributes its size times the total size of the orbits seen in
/// its d-set (plus the constant tuples when the constant block is included).
CoverageResult coverage_by_classes(const StarterVector& u, const std::optional<StarterVector>& v,
                                   const OrbitTable& orbits, bool include_constants = true);

std::uint64_t binomial(int n, int r);

}  // namespace pglca
