#include "pglca/search.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pglca {

bool better(const StarterScore& a, const StarterScore& b, Objective objective) {
  if (objective == Objective::full)
    return std::pair(a.missing_pairs, a.uncovered) < std::pair(b.missing_pairs, b.uncovered);
  return std::pair(a.uncovered, a.missing_pairs) < std::pair(b.uncovered, b.missing_pairs);
}

bool same(const StarterScore& a, const StarterScore& b) {
  return a.missing_pairs == b.missing_pairs && a.uncovered == b.uncovered;
}

StarterScorer::StarterScorer(std::vector<StarterVector> vectors, const OrbitTable& orbits,
                             bool include_constants)
    : vectors_(std::move(vectors)),
      k_(vectors_.empty() ? 0 : static_cast<int>(vectors_.front().size())),
      g_(orbits.symbol_count()),
      orbit_count_(orbits.orbit_count()),
      lookup_(orbits.lookup()) {
  if (vectors_.empty() || vectors_.size() > 2) throw std::invalid_argument("need one or two starter vectors");
  for (const auto& v : vectors_) {
    if (static_cast<int>(v.size()) != k_) throw std::invalid_argument("starter vectors differ in length");
    StarterVector twice(v);
    twice.insert(twice.end(), v.begin(), v.end());
    doubled_.push_back(std::move(twice));
  }
  const auto classes = enumerate_classes(k_);
  for (const auto& o : orbits.orbits()) pair_.push_back(o.constant ? 0 : 1);
  weight_.assign(classes.size() * orbit_count_, 0);
  counts_.assign(classes.size() * orbit_count_, 0);

  // Everything starts uncovered; adding tuples then moves counters off zero.
  for (std::size_t c = 0; c < classes.size(); ++c) {
    offsets_.push_back(classes[c].offsets());
    for (std::size_t o = 0; o < orbit_count_; ++o) {
      if (!pair_[o] && include_constants) continue;
      weight_[c * orbit_count_ + o] = classes[c].size * orbits.orbit(static_cast<int>(o)).size();
      score_.missing_pairs += pair_[o];
      score_.uncovered += weight_[c * orbit_count_ + o];
    }
  }
  for (int w = 0; w < static_cast<int>(vectors_.size()); ++w) {
    const Symbol* s = doubled_[w].data();
    for (int i = 0; i < k_; ++i)
      for (std::size_t c = 0; c < offsets_.size(); ++c) {
        const auto& off = offsets_[c];
        const std::uint32_t code =
            ((s[i] * g_ + s[i + off[1]]) * g_ + s[i + off[2]]) * g_ + s[i + off[3]];
        if (counts_[c * orbit_count_ + lookup_[code]]++ == 0) bump(c * orbit_count_ + lookup_[code], true);
      }
  }
}

void StarterScorer::bump(std::size_t slot, bool now_present) {
  const std::uint64_t weight = weight_[slot];
  if (weight == 0) return;
  const std::uint64_t pair = pair_[slot % orbit_count_];
  if (now_present) {
    score_.missing_pairs -= pair;
    score_.uncovered -= weight;
  } else {
    score_.missing_pairs += pair;
    score_.uncovered += weight;
  }
}

// Adds (delta = +1) or removes (-1) every d-set tuple that reads `position`.
// Members are copied to locals: symbol reads are char-typed and would
// otherwise force reloads after every counter store.
void StarterScorer::account(int vector, int position, int delta) {
  const Symbol* s = doubled_[vector].data();
  const int k = k_;
  const std::uint32_t g = static_cast<std::uint32_t>(g_);
  const std::size_t orbit_count = orbit_count_;
  const std::size_t classes = offsets_.size();
  const std::array<int, 4>* offsets = offsets_.data();
  const std::uint16_t* lookup = lookup_.data();
  std::uint32_t* counts = counts_.data();
  for (std::size_t c = 0; c < classes; ++c) {
    const auto off = offsets[c];
    const std::size_t base = c * orbit_count;
    for (int j = 0; j < 4; ++j) {
      int i = position - off[j];
      if (i < 0) i += k;
      const std::uint32_t code = ((s[i] * g + s[i + off[1]]) * g + s[i + off[2]]) * g + s[i + off[3]];
      const std::size_t slot = base + lookup[code];
      const std::uint32_t before = counts[slot];
      const std::uint32_t after = before + static_cast<std::uint32_t>(delta);
      counts[slot] = after;
      if ((before == 0) != (after == 0)) bump(slot, after != 0);
    }
  }
}

void StarterScorer::set(int vector, int position, Symbol symbol) {
  if (vectors_[vector][position] == symbol) return;
  account(vector, position, -1);
  vectors_[vector][position] = symbol;
  doubled_[vector][position] = symbol;
  doubled_[vector][position + k_] = symbol;
  account(vector, position, +1);
}

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::mt19937_64 restart_rng(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  return std::mt19937_64(seq);
}

struct RestartOutcome {
  std::vector<StarterVector> vectors;
  StarterScore score;
  std::uint64_t moves = 0;
};

RestartOutcome run_restart(const SearchConfig& cfg, const OrbitTable& orbits, int restart,
                           std::uint64_t budget) {
  auto rng = restart_rng(cfg.seed, restart);
  const int nvec = cfg.mode == SearchMode::two_vector ? 2 : 1;
  std::vector<StarterVector> start;
  if (restart == 0 && !cfg.initial.empty()) {
    start = cfg.initial;
  } else {
    std::uniform_int_distribution<int> sym(0, cfg.g - 1);
    for (int w = 0; w < nvec; ++w) {
      StarterVector v(cfg.k);
      for (auto& s : v) s = static_cast<Symbol>(sym(rng));
      start.push_back(std::move(v));
    }
  }
  StarterScorer scorer(std::move(start), orbits, cfg.include_constants);

  std::uniform_int_distribution<int> pick_vec(0, nvec - 1);
  std::uniform_int_distribution<int> pick_pos(0, cfg.k - 1);
  std::uniform_int_distribution<int> pick_shift(1, cfg.g - 1);
  int sideways = 0;
  std::uint64_t moves = 0;
  for (; moves < budget; ++moves) {
    if (cfg.objective == Objective::full && scorer.score().missing_pairs == 0) break;
    const int w = pick_vec(rng);
    const int i = pick_pos(rng);
    const Symbol old = scorer.vectors()[w][i];
    const auto next = static_cast<Symbol>((old + pick_shift(rng)) % cfg.g);
    const StarterScore before = scorer.score();
    scorer.set(w, i, next);
    const StarterScore& after = scorer.score();
    if (better(after, before, cfg.objective)) {
      sideways = 0;
    } else if (same(after, before) && sideways < cfg.plateau_cap) {
      ++sideways;
    } else {
      scorer.set(w, i, old);
    }
  }
  return {scorer.vectors(), scorer.score(), moves};
}

}  // namespace

SearchResult search_starters(const SearchConfig& cfg, const OrbitTable& orbits) {
  if (cfg.budget == 0) throw std::invalid_argument("search budget must be positive");
  if (cfg.restarts < 1) throw std::invalid_argument("restart count must be positive");
  if (cfg.g != orbits.symbol_count()) throw std::invalid_argument("config g does not match orbit table");
  if (cfg.k < 4) throw DegreeTooSmall(cfg.k, 4);
  const std::size_t nvec = cfg.mode == SearchMode::two_vector ? 2 : 1;
  if (!cfg.initial.empty()) {
    if (cfg.initial.size() != nvec) throw std::invalid_argument("initial vectors do not match the search mode");
    for (const auto& v : cfg.initial)
      if (static_cast<int>(v.size()) != cfg.k) throw std::invalid_argument("initial vector length differs from k");
  }

  const std::uint64_t per_restart = std::max<std::uint64_t>(1, cfg.budget / cfg.restarts);
  std::vector<RestartOutcome> outcomes(cfg.restarts);
  const unsigned workers = std::min<unsigned>(resolve_threads(cfg.threads), cfg.restarts);
  const auto work = [&](unsigned id) {
    for (int r = static_cast<int>(id); r < cfg.restarts; r += static_cast<int>(workers))
      outcomes[r] = run_restart(cfg, orbits, r, per_restart);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
  }

  SearchResult res;
  const std::uint64_t total = coverage_by_classes(outcomes[0].vectors.front(), std::nullopt, orbits).total;
  for (int r = 0; r < cfg.restarts; ++r) {
    const auto& o = outcomes[r];
    res.moves += o.moves;
    std::ostringstream line;
    line << "restart " << r << ": missing_pairs=" << o.score.missing_pairs
         << " covered=" << (total - o.score.uncovered) << '/' << total << " moves=" << o.moves;
    res.log.push_back(line.str());
    if (r == 0 || better(o.score, outcomes[res.best_restart].score, cfg.objective)) res.best_restart = r;
  }
  const auto& best = outcomes[res.best_restart];
  res.vectors = best.vectors;
  res.score = best.score;
  std::optional<StarterVector> v;
  if (res.vectors.size() == 2) v = res.vectors[1];
  res.residual = starter_check(res.vectors[0], v, orbits);
  res.coverage = coverage_by_classes(res.vectors[0], v, orbits, cfg.include_constants);
  return res;
}

namespace {

struct Obligation {
  std::array<int, 4> rows;
  int orbit;
};

std::vector<Obligation> obligations_of(const ResidualReport& residual) {
  std::vector<Obligation> out;
  const int k = residual.k;
  for (const auto& e : residual.deficient) {
    const auto off = e.cls.offsets();
    for (int i = 0; i < k; ++i)
      for (int orbit : e.missing)
        out.push_back({{i, (i + off[1]) % k, (i + off[2]) % k, (i + off[3]) % k}, orbit});
  }
  return out;
}

bool matches(const Obligation& ob, const TestingArray& m, int col, const OrbitTable& orbits) {
  return orbits.id_of({m.at(ob.rows[0], col), m.at(ob.rows[1], col), m.at(ob.rows[2], col),
                       m.at(ob.rows[3], col)}) == ob.orbit;
}

}  // namespace

std::size_t residual_matrix_unsatisfied(const ResidualReport& residual, const TestingArray& c1,
                                        const OrbitTable& orbits) {
  if (c1.rows() != residual.k && !residual.empty())
    throw std::invalid_argument("C1 row count differs from the residual's k");
  std::size_t unsatisfied = 0;
  for (const auto& ob : obligations_of(residual)) {
    bool hit = false;
    for (int c = 0; c < c1.columns() && !hit; ++c) hit = matches(ob, c1, c, orbits);
    if (!hit) ++unsatisfied;
  }
  return unsatisfied;
}

ResidualMatrixResult search_residual_matrix(const ResidualReport& residual, int width,
                                            const SearchConfig& cfg, const OrbitTable& orbits) {
  const int k = residual.k;
  const int g = orbits.symbol_count();
  if (width < 0) throw std::invalid_argument("C1 width must be non-negative");
  const auto obligations = obligations_of(residual);
  ResidualMatrixResult best{TestingArray(g, k, width), obligations.empty(), obligations.size(), 0};
  if (obligations.empty() || width == 0) return best;
  if (cfg.budget == 0) throw std::invalid_argument("search budget must be positive");

  std::vector<std::vector<int>> by_row(k);
  for (int ob = 0; ob < static_cast<int>(obligations.size()); ++ob)
    for (int r : obligations[ob].rows) by_row[r].push_back(ob);

  const int restarts = std::max(1, cfg.restarts);
  const std::uint64_t per_restart = std::max<std::uint64_t>(1, cfg.budget / restarts);
  for (int r = 0; r < restarts && !best.success; ++r) {
    auto rng = restart_rng(cfg.seed, r);
    std::uniform_int_distribution<int> sym(0, g - 1);
    TestingArray m(g, k, width);
    for (int row = 0; row < k; ++row)
      for (auto& s : m.row(row)) s = static_cast<Symbol>(sym(rng));

    std::vector<int> hits(obligations.size(), 0);
    std::size_t unsatisfied = 0;
    for (std::size_t ob = 0; ob < obligations.size(); ++ob) {
      for (int c = 0; c < width; ++c) hits[ob] += matches(obligations[ob], m, c, orbits);
      unsatisfied += hits[ob] == 0;
    }

    std::uniform_int_distribution<int> pick_row(0, k - 1);
    std::uniform_int_distribution<int> pick_col(0, width - 1);
    std::uniform_int_distribution<int> pick_shift(1, g - 1);
    const auto change = [&](int row, int col, Symbol s) {
      for (int ob : by_row[row]) {
        const bool before = matches(obligations[ob], m, col, orbits);
        const Symbol saved = m.at(row, col);
        m.at(row, col) = s;
        const bool after = matches(obligations[ob], m, col, orbits);
        m.at(row, col) = saved;
        if (before == after) continue;
        if (after) {
          if (hits[ob]++ == 0) --unsatisfied;
        } else {
          if (--hits[ob] == 0) ++unsatisfied;
        }
      }
      m.at(row, col) = s;
    };

    int sideways = 0;
    std::uint64_t moves = 0;
    for (; moves < per_restart && unsatisfied > 0; ++moves) {
      const int row = pick_row(rng);
      const int col = pick_col(rng);
      const Symbol old = m.at(row, col);
      const auto next = static_cast<Symbol>((old + pick_shift(rng)) % g);
      const std::size_t before = unsatisfied;
      change(row, col, next);
      if (unsatisfied < before) {
        sideways = 0;
      } else if (unsatisfied == before && sideways < cfg.plateau_cap) {
        ++sideways;
      } else {
        change(row, col, old);
      }
    }
    best.moves += moves;
    if (unsatisfied < best.unsatisfied || r == 0) {
      best.matrix = m;
      best.unsatisfied = unsatisfied;
      best.success = unsatisfied == 0;
    }
  }
  return best;
}

std::vector<ExtensionCandidate> search_extension(const StarterVector& u,
                                                 const std::optional<StarterVector>& v,
                                                 const OrbitTable& orbits) {
  std::vector<ExtensionCandidate> passing;
  for (const auto& c : check_extension(u, v, orbits))
    if (c.passes) passing.push_back(c);
  return passing;
}

}  // namespace pglca
