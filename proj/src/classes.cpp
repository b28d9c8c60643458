#include "pglca/classes.hpp"

#include <algorithm>
#include <string>

namespace pglca {

DegreeTooSmall::DegreeTooSmall(int k, int minimum)
    : std::invalid_argument("degree k=" + std::to_string(k) + " is below the minimum " +
                            std::to_string(minimum)) {}

namespace {

bool is_canonical(int x, int y, int z, int k) {
  if (4 * x == k && y == x && z == x) return true;  // [k/4, k/4, k/4]
  if (x < 1 || x > k / 4 || y < x || z < x) return false;
  if (2 * x + y + z >= k) return false;
  if (x == z && y > (k - 2 * x) / 2) return false;
  return true;
}

}  // namespace

std::size_t class_size(int k, const EquivClass& cls) {
  const int w = cls.w(k);
  if (cls.x == cls.y && cls.y == cls.z && cls.z == w) return static_cast<std::size_t>(k / 4);
  if (cls.x == cls.z && cls.y == w) return static_cast<std::size_t>(k / 2);
  return static_cast<std::size_t>(k);
}

std::vector<EquivClass> enumerate_classes(int k) {
  if (k < 4) throw DegreeTooSmall(k, 4);
  std::vector<EquivClass> out;
  for (int x = 1; x <= k / 4; ++x)
    for (int y = x; y < k; ++y)
      for (int z = x; 2 * x + y + z < k; ++z) {
        if (x == z && y > (k - 2 * x) / 2) continue;
        out.push_back({x, y, z, 0});
      }
  if (k % 4 == 0) out.push_back({k / 4, k / 4, k / 4, 0});
  std::sort(out.begin(), out.end());
  for (auto& c : out) c.size = class_size(k, c);
  return out;
}

EquivClass class_of(std::array<int, 4> subset, int k) {
  std::sort(subset.begin(), subset.end());
  const std::array<int, 4> gaps{subset[1] - subset[0], subset[2] - subset[1],
                                subset[3] - subset[2], k - (subset[3] - subset[0])};
  std::optional<EquivClass> best;
  for (int r = 0; r < 4; ++r) {
    const EquivClass c{gaps[r], gaps[(r + 1) % 4], gaps[(r + 2) % 4], 0};
    if (!is_canonical(c.x, c.y, c.z, k)) continue;
    if (!best || c < *best) best = c;
  }
  if (!best) throw std::logic_error("no canonical rotation for 4-subset");
  best->size = class_size(k, *best);
  return *best;
}

std::vector<std::array<int, 4>> class_members(int k, const EquivClass& cls) {
  std::vector<std::array<int, 4>> out;
  const auto off = cls.offsets();
  for (int i = 0; i < k; ++i) {
    std::array<int, 4> s{};
    for (int j = 0; j < 4; ++j) s[j] = (i + off[j]) % k;
    std::sort(s.begin(), s.end());
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::vector<Tuple4> d_set(const StarterVector& u, const std::optional<StarterVector>& v,
                          const EquivClass& cls) {
  const int k = static_cast<int>(u.size());
  if (v && static_cast<int>(v->size()) != k)
    throw std::invalid_argument("starter vectors differ in length");
  const auto off = cls.offsets();
  std::vector<Tuple4> out;
  out.reserve(v ? 2 * k : k);
  const auto read = [&](const StarterVector& s) {
    for (int i = 0; i < k; ++i)
      out.push_back({s[i], s[(i + off[1]) % k], s[(i + off[2]) % k], s[(i + off[3]) % k]});
  };
  read(u);
  if (v) read(*v);
  return out;
}

std::vector<FixedRowClass> enumerate_fixed_row_classes(int k) {
  if (k < 5) throw DegreeTooSmall(k, 5);
  const int m = k - 1;
  std::vector<FixedRowClass> out;
  for (int x = 1; x < m; ++x)
    for (int y = x; x + y < m; ++y) {
      const int w = m - x - y;
      if (w < x) continue;
      // Rotations (y, w, x) and (w, x, y) must not be lexicographically smaller.
      if (y == x && w < y) continue;
      if (w == x && y > w) continue;
      std::size_t size = (x == y && y == w) ? static_cast<std::size_t>(m / 3)
                                            : static_cast<std::size_t>(m);
      out.push_back({x, y, size});
    }
  return out;
}

FixedRowClass fixed_row_class_of(std::array<int, 3> t, int k) {
  const int m = k - 1;
  std::sort(t.begin(), t.end());
  const std::array<int, 3> gaps{t[1] - t[0], t[2] - t[1], m - (t[2] - t[0])};
  std::array<int, 3> best{m, m, m};
  for (int r = 0; r < 3; ++r) {
    const std::array<int, 3> rot{gaps[r], gaps[(r + 1) % 3], gaps[(r + 2) % 3]};
    best = std::min(best, rot);
  }
  const bool symmetric = best[0] == best[1] && best[1] == best[2];
  return {best[0], best[1], static_cast<std::size_t>(symmetric ? m / 3 : m)};
}

std::vector<std::array<int, 4>> fixed_row_members(int k, const FixedRowClass& cls) {
  const int m = k - 1;
  std::vector<std::array<int, 4>> out;
  const auto off = cls.offsets();
  for (int t = 0; t < m; ++t) {
    std::array<int, 4> s{(t + off[0]) % m, (t + off[1]) % m, (t + off[2]) % m, m};
    std::sort(s.begin(), s.begin() + 3);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::vector<Tuple4> fixed_row_d_set(const StarterVector& u, Symbol s, const FixedRowClass& cls) {
  const int m = static_cast<int>(u.size());
  const auto off = cls.offsets();
  std::vector<Tuple4> out;
  out.reserve(m);
  for (int t = 0; t < m; ++t)
    out.push_back({u[t], u[(t + off[1]) % m], u[(t + off[2]) % m], s});
  return out;
}

}  // namespace pglca
