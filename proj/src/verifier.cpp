#include "pglca/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <vector>

#include <json.hpp>
#include "pglca/kernels.hpp"

namespace pglca {

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / i;
  return out;
}

double CoverageResult::mu_rounded() const {
  if (total == 0) return 1.0;
  const std::uint64_t thousandths = (covered * 2000 + total) / (2 * total);
  return static_cast<double>(thousandths) / 1000.0;
}

std::string CoverageResult::to_record() const {
  nlohmann::ordered_json j;
  j["covered"] = covered;
  j["total"] = total;
  j["mu"] = mu_rounded();
  j["n"] = n;
  j["k"] = k;
  j["g"] = g;
  if (witness) {
    j["witness"] = {{"rows", witness->rows}, {"tuple", tuple_string(witness->tuple, g)}};
  }
  return j.dump();
}

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct ScanResult {
  std::uint64_t covered = 0;
  // Smallest failing (a,b) item and, inside it, the failing rows and tuple.
  std::size_t fail_item = SIZE_MAX;
  std::optional<Witness> witness;
};

// Streams over all row 4-subsets grouped by their leading pair (a,b). Items
// are handed to threads round-robin; `stop_at_failure` abandons items beyond
// the earliest failing one found so far.
ScanResult scan(const TestingArray& arr, unsigned threads, bool stop_at_failure) {
  const int k = arr.rows();
  const int n = arr.columns();
  const int g = arr.symbol_count();
  const std::uint32_t tuples = static_cast<std::uint32_t>(g * g * g * g);
  const std::size_t words = (tuples + 63) / 64;

  std::vector<std::array<int, 2>> items;
  for (int a = 0; a + 3 < k; ++a)
    for (int b = a + 1; b + 2 < k; ++b) items.push_back({a, b});

  std::atomic<std::size_t> first_fail{SIZE_MAX};
  const unsigned workers = std::min<unsigned>(resolve_threads(threads),
                                              std::max<std::size_t>(1, items.size()));
  std::vector<ScanResult> partial(workers);

  const auto work = [&](unsigned id) {
    const auto& kern = kernels::active();
    std::vector<std::uint16_t> ab(n);
    std::vector<std::uint16_t> codes(n);
    std::vector<std::uint64_t> bits(words);
    ScanResult& out = partial[id];
    for (std::size_t it = id; it < items.size(); it += workers) {
      if (stop_at_failure && it > first_fail.load(std::memory_order_relaxed)) break;
      const auto [a, b] = items[it];
      kern.pair_codes(arr.row(a).data(), arr.row(b).data(), g, ab.data(), n);
      bool item_failed = false;
      for (int c = b + 1; c + 1 < k && !(item_failed && stop_at_failure); ++c) {
        for (int d = c + 1; d < k; ++d) {
          std::fill(bits.begin(), bits.end(), 0);
          kern.quad_codes(ab.data(), arr.row(c).data(), arr.row(d).data(), g, codes.data(), n);
          kernels::mark_codes(codes.data(), n, bits.data());
          const std::uint64_t cnt = kern.popcount(bits.data(), words);
          out.covered += cnt;
          if (cnt == tuples || item_failed) continue;
          item_failed = true;
          if (it < out.fail_item) {
            std::uint32_t code = 0;
            while (bits[code >> 6] >> (code & 63) & 1) ++code;
            out.fail_item = it;
            out.witness = Witness{{a, b, c, d}, unpack_tuple(code, g)};
            std::size_t cur = first_fail.load();
            while (it < cur && !first_fail.compare_exchange_weak(cur, it)) {
            }
          }
          if (stop_at_failure) break;
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
  }

  ScanResult total;
  for (const auto& p : partial) {
    total.covered += p.covered;
    if (p.fail_item < total.fail_item) {
      total.fail_item = p.fail_item;
      total.witness = p.witness;
    }
  }
  return total;
}

}  // namespace

Verdict is_covering_array(const TestingArray& a, unsigned threads) {
  if (a.rows() < 4) return {true, std::nullopt};
  const ScanResult r = scan(a, threads, true);
  return {!r.witness.has_value(), r.witness};
}

CoverageResult coverage_brute(const TestingArray& a, unsigned threads) {
  CoverageResult res;
  res.k = a.rows();
  res.g = a.symbol_count();
  res.n = a.columns();
  const std::uint64_t g4 = static_cast<std::uint64_t>(res.g) * res.g * res.g * res.g;
  res.total = binomial(res.k, 4) * g4;
  if (res.k < 4) return res;
  const ScanResult r = scan(a, threads, false);
  res.covered = r.covered;
  res.witness = r.witness;
  return res;
}

CoverageResult coverage_by_classes(const StarterVector& u, const std::optional<StarterVector>& v,
                                   const OrbitTable& orbits, bool include_constants) {
  const int k = static_cast<int>(u.size());
  const int g = orbits.symbol_count();
  CoverageResult res;
  res.k = k;
  res.g = g;
  const std::uint64_t g4 = static_cast<std::uint64_t>(g) * g * g * g;
  res.total = binomial(k, 4) * g4;
  res.n = (v ? 2 : 1) * k * g * (g - 1) * (g - 2) + (include_constants ? g : 0);

  std::vector<char> seen(orbits.orbit_count());
  for (const auto& cls : enumerate_classes(k)) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& t : d_set(u, v, cls)) seen[orbits.id_of(t)] = 1;
    if (include_constants) seen[orbits.constant_orbit_id()] = 1;
    std::uint64_t per_subset = 0;
    for (std::size_t id = 0; id < seen.size(); ++id)
      if (seen[id]) per_subset += orbits.orbit(static_cast<int>(id)).size();
    res.covered += cls.size * per_subset;
  }
  return res;
}

}  // namespace pglca
