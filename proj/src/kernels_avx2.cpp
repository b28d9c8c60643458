// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace pglca::kernels::detail {

void map_symbols_avx2(const Symbol* src, const Symbol* lut, Symbol* dst, std::size_t n) {
  const __m128i table128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(lut));
  const __m256i table = _mm256_broadcastsi128_si256(table128);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_shuffle_epi8(table, idx));
  }
  map_symbols_scalar(src + i, lut, dst + i, n - i);
}

void pair_codes_avx2(const Symbol* a, const Symbol* b, int g, std::uint16_t* out, std::size_t n) {
  const __m256i vg = _mm256_set1_epi16(static_cast<short>(g));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i va = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
    const __m256i vb = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
    const __m256i r = _mm256_add_epi16(_mm256_mullo_epi16(va, vg), vb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  pair_codes_scalar(a + i, b + i, g, out + i, n - i);
}

void quad_codes_avx2(const std::uint16_t* ab, const Symbol* c, const Symbol* d, int g,
                     std::uint16_t* out, std::size_t n) {
  const __m256i vg = _mm256_set1_epi16(static_cast<short>(g));
  const __m256i vgg = _mm256_set1_epi16(static_cast<short>(g * g));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i vab = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ab + i));
    const __m256i vc = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(c + i)));
    const __m256i vd = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(d + i)));
    __m256i r = _mm256_mullo_epi16(vab, vgg);
    r = _mm256_add_epi16(r, _mm256_mullo_epi16(vc, vg));
    r = _mm256_add_epi16(r, vd);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  quad_codes_scalar(ab + i, c + i, d + i, g, out + i, n - i);
}

// Nibble-table popcount with byte sums accumulated by SAD.
std::uint64_t popcount_avx2(const std::uint64_t* words, std::size_t n) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  std::uint64_t total = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
  return total + popcount_scalar(words + i, n - i);
}

}  // namespace pglca::kernels::detail
