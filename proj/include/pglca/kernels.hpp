#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "pglca/field.hpp"

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64, an AVX2 version chosen at runtime when the CPU supports it. The
// two must agree bit for bit (see tests/test_kernels.cpp).
namespace pglca::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  /// dst[i] = lut[src[i]]; lut has 16 entries (symbols never exceed 9).
  void (*map_symbols)(const Symbol* src, const Symbol* lut, Symbol* dst, std::size_t n);
  /// out[i] = a[i] * g + b[i].
  void (*pair_codes)(const Symbol* a, const Symbol* b, int g, std::uint16_t* out, std::size_t n);
  /// out[i] = ab[i] * g^2 + c[i] * g + d[i], the packed 4-tuple code.
  void (*quad_codes)(const std::uint16_t* ab, const Symbol* c, const Symbol* d, int g,
                     std::uint16_t* out, std::size_t n);
  std::uint64_t (*popcount)(const std::uint64_t* words, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 kernels were not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table();

/// Kernels used by the library; defaults to the best available ISA. The
/// PGLCA_ISA environment variable ("scalar" or "avx2") overrides the default.
const KernelTable& active();
/// Throws std::invalid_argument when the requested ISA is unavailable.
void select(Isa isa);
Isa parse_isa(std::string_view name);

/// Sets bit codes[i] in `bits` for every i.
inline void mark_codes(const std::uint16_t* codes, std::size_t n, std::uint64_t* bits) {
  for (std::size_t i = 0; i < n; ++i) bits[codes[i] >> 6] |= std::uint64_t{1} << (codes[i] & 63);
}

}  // namespace pglca::kernels
