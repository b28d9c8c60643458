#include "pglca/builder.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "pglca/kernels.hpp"

namespace pglca {

std::size_t ResidualReport::missing_pairs() const {
  std::size_t n = 0;
  for (const auto& e : deficient) n += e.missing.size();
  return n;
}

std::string format_report(const ResidualReport& report, const OrbitTable& orbits) {
  const bool numbered = orbits.symbol_count() == 3;
  std::ostringstream os;
  for (const auto& e : report.deficient) {
    os << "d[" << e.cls.x << ',' << e.cls.y << ',' << e.cls.z << "] |";
    for (int id : e.missing) os << ' ' << (numbered ? g3_numbering::residual(id, orbits) : id);
    os << '\n';
  }
  os << report.deficient.size() << " of " << report.classes_checked
     << " classes miss an orbit (" << report.missing_pairs() << " missing pairs)\n";
  return os.str();
}

TestingArray circulant(const StarterVector& u, int g) {
  const int k = static_cast<int>(u.size());
  TestingArray a(g, k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.at(i, j) = u[((i - j) % k + k) % k];
  return a;
}

TestingArray develop(const TestingArray& block, const std::vector<GroupElement>& group) {
  const int k = block.rows();
  const int n = block.columns();
  TestingArray out(block.symbol_count(), k, n * static_cast<int>(group.size()));
  const auto& kern = kernels::active();
  std::array<Symbol, 16> lut{};
  for (std::size_t e = 0; e < group.size(); ++e) {
    std::copy(group[e].action.begin(), group[e].action.end(), lut.begin());
    for (int r = 0; r < k; ++r)
      kern.map_symbols(block.row(r).data(), lut.data(), out.row(r).data() + e * n, n);
  }
  return out;
}

TestingArray constant_columns(int g, int k) {
  if (g < 2) throw std::invalid_argument("constant columns need g >= 2");
  TestingArray a(g, k, g);
  for (int r = 0; r < k; ++r)
    for (int x = 0; x < g; ++x) a.at(r, x) = static_cast<Symbol>(x);
  return a;
}

ResidualReport starter_check(const StarterVector& u, const std::optional<StarterVector>& v,
                             const OrbitTable& orbits) {
  const int k = static_cast<int>(u.size());
  if (v && static_cast<int>(v->size()) != k)
    throw std::invalid_argument("starter vectors differ in length (" + std::to_string(k) +
                                " vs " + std::to_string(v->size()) + ")");
  ResidualReport report;
  report.k = k;
  report.g = orbits.symbol_count();
  const auto classes = enumerate_classes(k);
  report.classes_checked = classes.size();
  std::vector<char> seen(orbits.orbit_count());
  for (const auto& cls : classes) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& t : d_set(u, v, cls)) seen[orbits.id_of(t)] = 1;
    ResidualReport::Entry entry{cls, {}};
    for (int id = 0; id < static_cast<int>(seen.size()); ++id)
      if (!seen[id] && !orbits.orbit(id).constant) entry.missing.push_back(id);
    if (!entry.missing.empty()) report.deficient.push_back(std::move(entry));
  }
  return report;
}

TestingArray assemble(const StarterVector& u, const std::optional<StarterVector>& v,
                      const std::optional<TestingArray>& c1, const Group& group,
                      AssembleOptions options) {
  const int g = group.symbol_count();
  const int k = static_cast<int>(u.size());
  if (v && static_cast<int>(v->size()) != k)
    throw std::invalid_argument("starter vectors differ in length");
  if (c1 && c1->rows() != k)
    throw std::invalid_argument("C1 has " + std::to_string(c1->rows()) + " rows, expected " +
                                std::to_string(k));
  if (c1 && c1->symbol_count() != g) throw std::invalid_argument("C1 alphabet mismatch");

  TestingArray out = develop(circulant(u, g), group.elements());
  if (v) out.append(develop(circulant(*v, g), group.elements()));
  if (c1 && c1->columns() > 0)
    out.append(options.undeveloped_c1 ? *c1 : develop(*c1, group.elements()));
  if (options.include_constants) out.append(constant_columns(g, k));
  return out;
}

int assembled_size(int k, bool two_vectors, int c1_width, int group_order, int g,
                   AssembleOptions options) {
  const int developed = (two_vectors ? 2 * k : k) + (options.undeveloped_c1 ? 0 : c1_width);
  return developed * group_order + (options.undeveloped_c1 ? c1_width : 0) +
         (options.include_constants ? g : 0);
}

namespace {

std::size_t deficient_fixed_classes(const std::vector<FixedRowClass>& classes,
                                    const StarterVector& u, Symbol su,
                                    const std::optional<StarterVector>& v,
                                    std::optional<Symbol> sv, const OrbitTable& orbits) {
  std::vector<char> seen(orbits.orbit_count());
  std::size_t deficient = 0;
  for (const auto& cls : classes) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& t : fixed_row_d_set(u, su, cls)) seen[orbits.id_of(t)] = 1;
    if (v)
      for (const auto& t : fixed_row_d_set(*v, *sv, cls)) seen[orbits.id_of(t)] = 1;
    for (int id = 0; id < static_cast<int>(seen.size()); ++id)
      if (!seen[id] && !orbits.orbit(id).constant) {
        ++deficient;
        break;
      }
  }
  return deficient;
}

}  // namespace

std::vector<ExtensionCandidate> check_extension(const StarterVector& u,
                                                const std::optional<StarterVector>& v,
                                                const OrbitTable& orbits) {
  if (v && v->size() != u.size()) throw std::invalid_argument("starter vectors differ in length");
  const int g = orbits.symbol_count();
  const int k = static_cast<int>(u.size()) + 1;
  const auto classes = enumerate_fixed_row_classes(k);
  std::vector<ExtensionCandidate> out;
  for (int su = 0; su < g; ++su) {
    for (int sv = 0; sv < (v ? g : 1); ++sv) {
      ExtensionCandidate c;
      c.u_symbol = static_cast<Symbol>(su);
      if (v) c.v_symbol = static_cast<Symbol>(sv);
      c.deficient_classes = deficient_fixed_classes(classes, u, c.u_symbol, v, c.v_symbol, orbits);
      c.passes = c.deficient_classes == 0;
      out.push_back(c);
    }
  }
  return out;
}

TestingArray assemble_extended(const StarterVector& u, Symbol u_symbol,
                               const std::optional<StarterVector>& v,
                               std::optional<Symbol> v_symbol, const Group& group,
                               bool include_constants) {
  const int g = group.symbol_count();
  const int m = static_cast<int>(u.size());
  if (v && (static_cast<int>(v->size()) != m || !v_symbol))
    throw std::invalid_argument("second starter needs the same length and a fixed symbol");
  const auto block = [&](const StarterVector& s, Symbol fixed) {
    const TestingArray c = circulant(s, g);
    TestingArray b(g, m + 1, m);
    for (int r = 0; r < m; ++r) std::copy(c.row(r).begin(), c.row(r).end(), b.row(r).begin());
    std::fill(b.row(m).begin(), b.row(m).end(), fixed);
    return b;
  };
  TestingArray out = develop(block(u, u_symbol), group.elements());
  if (v) out.append(develop(block(*v, *v_symbol), group.elements()));
  if (include_constants) out.append(constant_columns(g, m + 1));
  return out;
}

}  // namespace pglca
