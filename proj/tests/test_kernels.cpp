#include <doctest.h>

#include <random>

#include "pglca/kernels.hpp"
#include "pglca/verifier.hpp"
#include "support.hpp"

using namespace pglca;

TEST_CASE("SIMD kernels match the scalar reference") {
  const auto* simd = kernels::avx2_table();
  if (!simd) {
    MESSAGE("AVX2 kernels unavailable on this machine; scalar only");
    return;
  }
  const auto& ref = kernels::scalar_table();
  std::mt19937_64 rng(99);
  for (int g = 2; g <= 10; ++g)
    for (std::size_t n : {0u, 1u, 15u, 16u, 17u, 31u, 32u, 33u, 100u, 257u, 1000u}) {
      CAPTURE(g);
      CAPTURE(n);
      std::uniform_int_distribution<int> sym(0, g - 1);
      std::vector<Symbol> a(n), b(n), c(n), d(n), lut(16);
      for (auto* v : {&a, &b, &c, &d})
        for (auto& x : *v) x = static_cast<Symbol>(sym(rng));
      for (auto& x : lut) x = static_cast<Symbol>(sym(rng));

      std::vector<Symbol> m1(n), m2(n);
      ref.map_symbols(a.data(), lut.data(), m1.data(), n);
      simd->map_symbols(a.data(), lut.data(), m2.data(), n);
      CHECK(m1 == m2);

      std::vector<std::uint16_t> p1(n), p2(n), q1(n), q2(n);
      ref.pair_codes(a.data(), b.data(), g, p1.data(), n);
      simd->pair_codes(a.data(), b.data(), g, p2.data(), n);
      CHECK(p1 == p2);
      ref.quad_codes(p1.data(), c.data(), d.data(), g, q1.data(), n);
      simd->quad_codes(p1.data(), c.data(), d.data(), g, q2.data(), n);
      CHECK(q1 == q2);
      for (std::size_t i = 0; i < n; ++i) CHECK(q1[i] == pack_tuple({a[i], b[i], c[i], d[i]}, g));

      std::vector<std::uint64_t> words(n);
      for (auto& w : words) w = rng();
      CHECK(ref.popcount(words.data(), n) == simd->popcount(words.data(), n));
    }
}

TEST_CASE("verifier results do not depend on the selected kernels") {
  std::mt19937_64 rng(3);
  const auto a = support::random_array(rng, 4, 9, 300);
  kernels::select(kernels::Isa::scalar);
  const auto scalar = coverage_brute(a);
  const auto scalar_dev = develop(a, Group::of_order(4).elements());
  if (kernels::avx2_table()) {
    kernels::select(kernels::Isa::avx2);
    CHECK(std::string(kernels::active().name) == "avx2");
    const auto simd = coverage_brute(a);
    CHECK(simd.covered == scalar.covered);
    CHECK(simd.witness == scalar.witness);
    CHECK(develop(a, Group::of_order(4).elements()) == scalar_dev);
  }
  CHECK(kernels::parse_isa("scalar") == kernels::Isa::scalar);
  CHECK_THROWS(kernels::parse_isa("neon"));
}
