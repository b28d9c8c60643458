#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pglca/array.hpp"
#include "pglca/classes.hpp"
#include "pglca/group.hpp"
#include "pglca/orbit.hpp"

namespace pglca {

/// Orbits absent from the d-sets of each cyclic class. Missing ids never
/// include the constant orbit (the constant columns cover it).
struct ResidualReport {
  struct Entry {
    EquivClass cls;
    std::vector<int> missing;  // orbit ids, ascending
  };

  int k = 0;
  int g = 0;
  std::size_t classes_checked = 0;
  std::vector<Entry> deficient;

  bool empty() const { return deficient.empty(); }
  /// Number of (class, missing orbit) pairs.
  std::size_t missing_pairs() const;
};

/// Text form: one "d[x,y,z] | o1 o2 ..." line per deficient class followed by
/// a summary line. For g = 3 orbit numbers use g3_numbering::residual.
std::string format_report(const ResidualReport& report, const OrbitTable& orbits);

/// k x k block whose entry (i, j) is u[(i - j) mod k]: column 0 is u and each
/// later column is the previous one shifted down by one row.
TestingArray circulant(const StarterVector& u, int g);

/// [block^e : e in group], one relabeled copy per element in enumeration order.
TestingArray develop(const TestingArray& block, const std::vector<GroupElement>& group);

/// k x g block whose column x is constantly x.
TestingArray constant_columns(int g, int k);

ResidualReport starter_check(const StarterVector& u, const std::optional<StarterVector>& v,
                             const OrbitTable& orbits);

struct AssembleOptions {
  bool include_constants = true;
  /// Append C1 as given instead of developing it by the group.
  bool undeveloped_c1 = false;
};

/// [circ(u)^G, circ(v)^G, C1^G, C] with the optional parts omitted when absent.
TestingArray assemble(const StarterVector& u, const std::optional<StarterVector>& v,
                      const std::optional<TestingArray>& c1, const Group& group,
                      AssembleOptions options = {});

/// Column count assemble() produces: (k_u + k_v + l) |G| + g.
int assembled_size(int k, bool two_vectors, int c1_width, int group_order, int g,
                   AssembleOptions options = {});

/// Placement of a fixed last-row symbol for each starter vector.
struct ExtensionCandidate {
  Symbol u_symbol = 0;
  std::optional<Symbol> v_symbol;
  bool passes = false;
  /// Fixed-row classes whose d-sets miss at least one non-constant orbit.
  std::size_t deficient_classes = 0;
};

/// Tries every fixed last-row symbol (g placements, g^2 for two vectors) for
/// length-(k-1) starters and reports whether all fixed-row classes of the
/// degree-k extension see every non-constant orbit.
std::vector<ExtensionCandidate> check_extension(const StarterVector& u,
                                                const std::optional<StarterVector>& v,
                                                const OrbitTable& orbits);

/// Degree-k array from length-(k-1) starters: rows 0..k-2 are developed
/// cyclically and row k-1 holds the fixed symbol.
TestingArray assemble_extended(const StarterVector& u, Symbol u_symbol,
                               const std::optional<StarterVector>& v,
                               std::optional<Symbol> v_symbol, const Group& group,
                               bool include_constants = true);

}  // namespace pglca
