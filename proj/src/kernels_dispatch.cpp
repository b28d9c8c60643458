#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace pglca::kernels {

namespace {

const KernelTable kScalar{Isa::scalar, "scalar", detail::map_symbols_scalar,
                          detail::pair_codes_scalar, detail::quad_codes_scalar,
                          detail::popcount_scalar};

#if defined(PGLCA_HAVE_AVX2_KERNELS)
const KernelTable kAvx2{Isa::avx2, "avx2", detail::map_symbols_avx2, detail::pair_codes_avx2,
                        detail::quad_codes_avx2, detail::popcount_avx2};
#endif

bool cpu_has_avx2() {
#if defined(PGLCA_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("PGLCA_ISA")) {
    if (parse_isa(env) == Isa::scalar) return &kScalar;
  }
  if (const KernelTable* t = avx2_table()) return t;
  return &kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#if defined(PGLCA_HAVE_AVX2_KERNELS)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void select(Isa isa) {
  if (isa == Isa::scalar) {
    current().store(&kScalar);
    return;
  }
  const KernelTable* t = avx2_table();
  if (t == nullptr) throw std::invalid_argument("AVX2 kernels are not available on this machine");
  current().store(t);
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  throw std::invalid_argument("unknown ISA '" + std::string(name) + "' (expected scalar or avx2)");
}

}  // namespace pglca::kernels
