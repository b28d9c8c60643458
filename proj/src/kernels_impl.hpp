#pragma once

#include "pglca/kernels.hpp"

namespace pglca::kernels::detail {

void map_symbols_scalar(const Symbol* src, const Symbol* lut, Symbol* dst, std::size_t n);
void pair_codes_scalar(const Symbol* a, const Symbol* b, int g, std::uint16_t* out, std::size_t n);
void quad_codes_scalar(const std::uint16_t* ab, const Symbol* c, const Symbol* d, int g,
                       std::uint16_t* out, std::size_t n);
std::uint64_t popcount_scalar(const std::uint64_t* words, std::size_t n);

#if defined(PGLCA_HAVE_AVX2_KERNELS)
void map_symbols_avx2(const Symbol* src, const Symbol* lut, Symbol* dst, std::size_t n);
void pair_codes_avx2(const Symbol* a, const Symbol* b, int g, std::uint16_t* out, std::size_t n);
void quad_codes_avx2(const std::uint16_t* ab, const Symbol* c, const Symbol* d, int g,
                     std::uint16_t* out, std::size_t n);
std::uint64_t popcount_avx2(const std::uint64_t* words, std::size_t n);
#endif

}  // namespace pglca::kernels::detail
