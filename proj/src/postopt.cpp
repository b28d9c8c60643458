#include "pglca/postopt.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "pglca/orbit.hpp"
#include "pglca/verifier.hpp"

namespace pglca {

std::size_t FlexState::flexible_count() const {
  return static_cast<std::size_t>(std::count(flexible.begin(), flexible.end(), std::uint8_t{1}));
}

namespace {

struct Subset {
  std::uint32_t rank;
  std::array<std::uint8_t, 4> rows;  // ascending
};

void require_ca(const TestingArray& a) {
  if (a.rows() < 4) throw NotACoveringArray("array has fewer than 4 rows");
  const auto verdict = is_covering_array(a);
  if (!verdict.valid) {
    const auto& w = *verdict.witness;
    throw NotACoveringArray("not a covering array: rows " + std::to_string(w.rows[0]) + "," +
                            std::to_string(w.rows[1]) + "," + std::to_string(w.rows[2]) + "," +
                            std::to_string(w.rows[3]) + " miss " +
                            tuple_string(w.tuple, a.symbol_count()));
  }
}

class Optimizer {
 public:
  Optimizer(const TestingArray& a, std::uint64_t seed, int depth = 2)
      : depth_(depth),
        g_(a.symbol_count()), k_(a.rows()), g4_(g_ * g_ * g_ * g_), rng_(seed) {
    by_row_.resize(k_);
    std::uint32_t rank = 0;
    for (int a0 = 0; a0 < k_; ++a0)
      for (int a1 = a0 + 1; a1 < k_; ++a1)
        for (int a2 = a1 + 1; a2 < k_; ++a2)
          for (int a3 = a2 + 1; a3 < k_; ++a3, ++rank) {
            const Subset s{rank, {std::uint8_t(a0), std::uint8_t(a1), std::uint8_t(a2), std::uint8_t(a3)}};
            for (auto r : s.rows) by_row_[r].push_back(s);
          }
    counts_.assign(static_cast<std::size_t>(rank) * g4_, 0);
    for (int c = 0; c < a.columns(); ++c) {
      Column col{a.column(c), std::vector<std::uint8_t>(k_, 0)};
      cols_.push_back(std::move(col));
    }
    recount();
  }

  // Fixes every flexible entry at its current value.
  void unmark_all() {
    for (int c = 0; c < static_cast<int>(cols_.size()); ++c)
      for (int r = 0; r < k_; ++r)
        if (cols_[c].free[r]) fix(c, r, cols_[c].val[r]);
  }

  // Greedy marking in the given column order, rows of a column in random order.
  void mark(const std::vector<int>& order) {
    std::vector<int> rows(k_);
    std::iota(rows.begin(), rows.end(), 0);
    for (int c : order) {
      std::shuffle(rows.begin(), rows.end(), rng_);
      for (int r : rows)
        if (!cols_[c].free[r] && redundant(c, r)) release(c, r);
    }
  }

  std::vector<int> random_order() {
    std::vector<int> order(cols_.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng_);
    return order;
  }

  // Random permutation, then most flexible first.
  std::vector<int> flexibility_order() {
    auto order = random_order();
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return free_count(x) > free_count(y); });
    return order;
  }

  // Frees as many entries of `lead` as possible by fixing flexible entries of
  // other columns to the tuples only `lead` supplies.
  void concentrate(int lead) {
    std::vector<int> rows;
    for (int r = 0; r < k_; ++r)
      if (!cols_[lead].free[r]) rows.push_back(r);
    std::shuffle(rows.begin(), rows.end(), rng_);
    journal_.clear();
    std::vector<int> ban{lead};
    for (int r : rows) {
      const std::size_t mark = journal_.size();
      if (make_redundant(lead, r, depth_, ban)) release(lead, r);
      else rollback(mark);
    }
    journal_.clear();
  }

  // New random symbols for flexible entries outside `keep`.
  void scramble(int keep) {
    std::uniform_int_distribution<int> sym(0, g_ - 1);
    for (int c = 0; c < static_cast<int>(cols_.size()); ++c)
      if (c != keep)
        for (int r = 0; r < k_; ++r)
          if (cols_[c].free[r]) cols_[c].val[r] = static_cast<Symbol>(sym(rng_));
  }

  // Deletes entirely flexible columns; returns how many.
  int drop_free_columns() {
    const auto before = cols_.size();
    std::erase_if(cols_, [&](const Column& c) {
      return std::all_of(c.free.begin(), c.free.end(), [](std::uint8_t f) { return f != 0; });
    });
    return static_cast<int>(before - cols_.size());
  }

  int free_count(int c) const {
    return static_cast<int>(std::count(cols_[c].free.begin(), cols_[c].free.end(), std::uint8_t{1}));
  }

  TestingArray array() const {
    TestingArray out(g_, k_, static_cast<int>(cols_.size()));
    for (int c = 0; c < static_cast<int>(cols_.size()); ++c)
      for (int r = 0; r < k_; ++r) out.at(r, c) = cols_[c].val[r];
    return out;
  }

  std::vector<std::uint8_t> mask() const {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(k_) * cols_.size());
    for (std::size_t c = 0; c < cols_.size(); ++c)
      for (int r = 0; r < k_; ++r) m[static_cast<std::size_t>(r) * cols_.size() + c] = cols_[c].free[r];
    return m;
  }

  std::size_t columns() const { return cols_.size(); }

 private:
  struct Column {
    std::vector<Symbol> val;
    std::vector<std::uint8_t> free;
  };

  bool fixed_on(const Column& col, const Subset& s) const {
    return !col.free[s.rows[0]] && !col.free[s.rows[1]] && !col.free[s.rows[2]] && !col.free[s.rows[3]];
  }

  std::uint32_t code(const Column& col, const Subset& s) const {
    return pack_tuple({col.val[s.rows[0]], col.val[s.rows[1]], col.val[s.rows[2]], col.val[s.rows[3]]}, g_);
  }

  std::uint16_t& count(const Subset& s, std::uint32_t code) {
    return counts_[static_cast<std::size_t>(s.rank) * g4_ + code];
  }

  void recount() {
    std::fill(counts_.begin(), counts_.end(), 0);
    for (const auto& col : cols_)
      for (int r = 0; r < k_; ++r)
        for (const auto& s : by_row_[r])
          if (s.rows[0] == r && fixed_on(col, s)) ++count(s, code(col, s));
  }

  bool redundant(int c, int r) {
    const Column& col = cols_[c];
    for (const auto& s : by_row_[r])
      if (fixed_on(col, s) && count(s, code(col, s)) < 2) return false;
    return true;
  }

  void release(int c, int r) {
    Column& col = cols_[c];
    journal_.push_back({c, r, col.val[r], false});
    for (const auto& s : by_row_[r])
      if (fixed_on(col, s)) --count(s, code(col, s));
    col.free[r] = 1;
  }

  void fix(int c, int r, Symbol value) {
    Column& col = cols_[c];
    journal_.push_back({c, r, col.val[r], col.free[r] != 0});
    col.val[r] = value;
    col.free[r] = 0;
    for (const auto& s : by_row_[r])
      if (fixed_on(col, s)) ++count(s, code(col, s));
  }

  void rollback(std::size_t mark) {
    while (journal_.size() > mark) {
      const Change ch = journal_.back();
      journal_.pop_back();
      Column& col = cols_[ch.col];
      if (col.free[ch.row]) {
        // Undo a release.
        col.free[ch.row] = 0;
        for (const auto& s : by_row_[ch.row])
          if (fixed_on(col, s)) ++count(s, code(col, s));
      } else {
        // Undo a fix.
        for (const auto& s : by_row_[ch.row])
          if (fixed_on(col, s)) --count(s, code(col, s));
        col.val[ch.row] = ch.value;
        if (ch.was_free) col.free[ch.row] = 1;
        else
          for (const auto& s : by_row_[ch.row])
            if (fixed_on(col, s)) ++count(s, code(col, s));
      }
    }
  }

  bool banned(int c, const std::vector<int>& ban) const { return std::find(ban.begin(), ban.end(), c) != ban.end(); }

  // Re-covers every obligation that only (target, r) meets. Preferred: fix
  // flexible entries of another column, fewest changes first. With depth > 0 a
  // column that disagrees in one fixed entry may be used after that entry is
  // itself made redundant. On failure some changes may remain; callers roll
  // back through the journal.
  bool make_redundant(int target, int r, int depth, std::vector<int>& ban) {
    const int n = static_cast<int>(cols_.size());
    std::uniform_int_distribution<int> start_dist(0, n - 1);
    for (const auto& s : by_row_[r]) {
      if (!fixed_on(cols_[target], s)) continue;
      const std::uint32_t need = code(cols_[target], s);
      if (count(s, need) >= 2) continue;
      const Column& tc = cols_[target];
      const std::array<Symbol, 4> want{tc.val[s.rows[0]], tc.val[s.rows[1]], tc.val[s.rows[2]], tc.val[s.rows[3]]};
      int best = -1;
      int best_changes = 5;
      std::vector<std::pair<int, int>> near;  // (column, disagreeing row)
      const int start = start_dist(rng_);
      for (int step = 0; step < n && best_changes > 1; ++step) {
        const int c = (start + step) % n;
        if (banned(c, ban)) continue;
        const Column& col = cols_[c];
        int changes = 0;
        int clashes = 0;
        int clash_row = -1;
        for (int j = 0; j < 4 && clashes < 2; ++j) {
          const int row = s.rows[j];
          if (col.free[row]) ++changes;
          else if (col.val[row] != want[j]) {
            ++clashes;
            clash_row = row;
          }
        }
        if (clashes == 0 && changes < best_changes) {
          best = c;
          best_changes = changes;
        } else if (clashes == 1 && depth > 0 && near.size() < kNearLimit) {
          near.emplace_back(c, clash_row);
        }
      }
      if (best < 0) {
        for (const auto& [c, row] : near) {
          const std::size_t mark = journal_.size();
          ban.push_back(c);
          const bool ok = make_redundant(c, row, depth - 1, ban);
          ban.pop_back();
          if (ok) {
            release(c, row);
            best = c;
            break;
          }
          rollback(mark);
        }
        if (best < 0) return false;
      }
      for (int j = 0; j < 4; ++j)
        if (cols_[best].free[s.rows[j]]) fix(best, s.rows[j], want[j]);
    }
    return true;
  }

  struct Change {
    int col;
    int row;
    Symbol value;
    bool was_free;
  };
  static constexpr std::size_t kNearLimit = 6;

  int depth_;
  int g_;
  int k_;
  int g4_;
  std::mt19937_64 rng_;
  std::vector<std::vector<Subset>> by_row_;
  std::vector<std::uint16_t> counts_;
  std::vector<Column> cols_;
  std::vector<Change> journal_;
};

// Rounds without the lead column gaining flexibility before a fresh order.
constexpr int kPatience = 25;

}  // namespace

FlexState mark_flexible(const TestingArray& a, std::uint64_t seed) {
  require_ca(a);
  Optimizer opt(a, seed);
  opt.mark(opt.random_order());
  return {a, opt.mask(), seed};
}

TestingArray post_optimize(const TestingArray& a, std::uint64_t budget, std::uint64_t seed,
                           PostoptStats* stats) {
  require_ca(a);
  PostoptStats local;
  Optimizer opt(a, seed);
  TestingArray best = a;
  std::vector<int> order = opt.random_order();
  int last_lead_free = -1;
  int stale = 0;
  while (local.attempts < budget) {
    ++local.attempts;
    opt.unmark_all();
    opt.mark(order);
    const int lead = opt.flexibility_order().front();
    opt.concentrate(lead);
    const int dropped = opt.drop_free_columns();
    if (dropped > 0) {
      TestingArray candidate = opt.array();
      if (!is_covering_array(candidate).valid) throw std::logic_error("post-optimization lost coverage");
      best = std::move(candidate);
      local.removed += dropped;
      order = opt.random_order();
      last_lead_free = -1;
      stale = 0;
      continue;
    }
    const int lead_free = opt.free_count(lead);
    stale = lead_free > last_lead_free ? 0 : stale + 1;
    last_lead_free = std::max(last_lead_free, lead_free);
    opt.scramble(lead);
    ++local.remarks;
    if (stale >= kPatience) {
      // The lead stopped gaining flexibility: start over from a random order.
      order = opt.random_order();
      last_lead_free = -1;
      stale = 0;
    } else {
      order = opt.flexibility_order();
    }
  }
  if (stats) *stats = local;
  return best;
}

}  // namespace pglca
