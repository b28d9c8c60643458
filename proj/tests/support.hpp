#pragma once

#include <optional>
#include <random>

#include "pglca/builder.hpp"
#include "published.hpp"

namespace support {

inline pglca::StarterVector vec(const char* text, int g = 3) { return pglca::parse_symbols(text, g); }

inline pglca::TestingArray matrix(const std::vector<std::string>& rows, int g = 3) {
  pglca::TestingArray m(g, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows(); ++r) {
    const auto s = pglca::parse_symbols(rows[r], g);
    for (int c = 0; c < m.columns(); ++c) m.at(r, c) = s[c];
  }
  return m;
}

inline const published::Starter& table2(int k) {
  for (const auto& s : published::kTable2)
    if (s.k == k) return s;
  throw std::out_of_range("no such row");
}

inline pglca::TestingArray assemble_row(const published::Starter& s, const pglca::Group& grp) {
  std::optional<pglca::TestingArray> c1;
  if (s.c1) c1 = matrix(*s.c1);
  return pglca::assemble(vec(s.u), vec(s.v), c1, grp);
}

inline pglca::StarterVector random_vector(std::mt19937_64& rng, int k, int g) {
  std::uniform_int_distribution<int> d(0, g - 1);
  pglca::StarterVector v(k);
  for (auto& s : v) s = static_cast<pglca::Symbol>(d(rng));
  return v;
}

inline pglca::TestingArray random_array(std::mt19937_64& rng, int g, int k, int n) {
  std::uniform_int_distribution<int> d(0, g - 1);
  pglca::TestingArray a(g, k, n);
  for (int r = 0; r < k; ++r)
    for (auto& s : a.row(r)) s = static_cast<pglca::Symbol>(d(rng));
  return a;
}

}  // namespace support
