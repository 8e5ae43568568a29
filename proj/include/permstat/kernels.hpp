#pragma once

// Arithmetic kernels over one-line words.
//
// Every kernel has a scalar reference version and, on x86-64, an AVX2 version
// compiled in its own translation unit. The active table is chosen once at
// startup from the CPU feature bits; PERMSTAT_KERNELS=scalar in the
// environment forces the reference path.

#include <cstdint>
#include <span>
#include <string_view>

namespace permstat::kernels {

enum class Backend { scalar, avx2 };

std::string_view name(Backend b);

// Words hold the values of a permutation of [1,n] in position order; the
// kernels rely only on the values being distinct for inversion_count.
struct KernelTable {
  Backend backend;
  std::int64_t (*excedance_sum)(std::span<const int> word);
  std::int64_t (*abs_deviation_sum)(std::span<const int> word);
  std::int64_t (*squared_deviation_sum)(std::span<const int> word);
  std::int64_t (*inversion_count)(std::span<const int> word);
};

namespace scalar {
std::int64_t excedance_sum(std::span<const int> word);
std::int64_t abs_deviation_sum(std::span<const int> word);
std::int64_t squared_deviation_sum(std::span<const int> word);
std::int64_t inversion_count(std::span<const int> word);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define PERMSTAT_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::int64_t excedance_sum(std::span<const int> word);
std::int64_t abs_deviation_sum(std::span<const int> word);
std::int64_t squared_deviation_sum(std::span<const int> word);
std::int64_t inversion_count(std::span<const int> word);
}  // namespace avx2
#endif

bool cpu_supports(Backend b);

/// Table for a specific backend. Throws std::runtime_error when the backend
/// is not compiled in or the CPU lacks it.
const KernelTable& table(Backend b);

/// Table selected at first use.
const KernelTable& active();

}  // namespace permstat::kernels
