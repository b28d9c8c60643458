#include <bit>

#include "kernels_impl.hpp"

namespace pglca::kernels::detail {

void map_symbols_scalar(const Symbol* src, const Symbol* lut, Symbol* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = lut[src[i]];
}

void pair_codes_scalar(const Symbol* a, const Symbol* b, int g, std::uint16_t* out,
                       std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint16_t>(a[i] * g + b[i]);
}

void quad_codes_scalar(const std::uint16_t* ab, const Symbol* c, const Symbol* d, int g,
                       std::uint16_t* out, std::size_t n) {
  const int gg = g * g;
  for (std::size_t i = 0; i < n; ++i)
    out[i] = static_cast<std::uint16_t>(ab[i] * gg + c[i] * g + d[i]);
}

std::uint64_t popcount_scalar(const std::uint64_t* words, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(words[i]));
  return total;
}

}  // namespace pglca::kernels::detail
