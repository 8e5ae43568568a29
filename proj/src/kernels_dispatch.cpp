#include "permstat/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace permstat::kernels {
namespace {

constexpr KernelTable kScalar{Backend::scalar, &scalar::excedance_sum,
                              &scalar::abs_deviation_sum, &scalar::squared_deviation_sum,
                              &scalar::inversion_count};

#ifdef PERMSTAT_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{Backend::avx2, &avx2::excedance_sum, &avx2::abs_deviation_sum,
                            &avx2::squared_deviation_sum, &avx2::inversion_count};
#endif

const KernelTable& select() {
  if (const char* forced = std::getenv("PERMSTAT_KERNELS");
      forced != nullptr && std::string(forced) == "scalar")
    return kScalar;
#ifdef PERMSTAT_HAVE_AVX2_KERNELS
  if (cpu_supports(Backend::avx2)) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

std::string_view name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

bool cpu_supports(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2:
#if defined(PERMSTAT_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (b == Backend::scalar) return kScalar;
#ifdef PERMSTAT_HAVE_AVX2_KERNELS
  if (b == Backend::avx2 && cpu_supports(b)) return kAvx2;
#endif
  throw std::runtime_error("kernel backend unavailable: " + std::string(name(b)));
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

}  // namespace permstat::kernels
