// Compiled with -mavx2; only reached after a runtime CPU check.
#include "permstat/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace permstat::kernels::avx2 {
namespace {

constexpr std::size_t kLanes = 8;

inline __m256i load8(const int* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Sign-extends the eight int32 lanes of v and adds them into four int64 lanes.
inline __m256i add_widened(__m256i acc, __m256i v) {
  const __m256i lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(v));
  const __m256i hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(v, 1));
  return _mm256_add_epi64(acc, _mm256_add_epi64(lo, hi));
}

inline std::int64_t hsum_epi64(__m256i v) {
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// word[i] - (i+1) for the eight positions starting at `base`.
inline __m256i deviations(const int* word, std::size_t base) {
  const __m256i positions =
      _mm256_add_epi32(_mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 8),
                       _mm256_set1_epi32(static_cast<int>(base)));
  return _mm256_sub_epi32(load8(word + base), positions);
}

}  // namespace

std::int64_t excedance_sum(std::span<const int> word) {
  const std::size_t n = word.size();
  const std::size_t body = n - n % kLanes;
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t i = 0; i < body; i += kLanes)
    acc = add_widened(acc, _mm256_max_epi32(deviations(word.data(), i), zero));
  std::int64_t sum = hsum_epi64(acc);
  for (std::size_t i = body; i < n; ++i) {
    const std::int64_t d = word[i] - static_cast<std::int64_t>(i + 1);
    if (d > 0) sum += d;
  }
  return sum;
}

std::int64_t abs_deviation_sum(std::span<const int> word) {
  const std::size_t n = word.size();
  const std::size_t body = n - n % kLanes;
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t i = 0; i < body; i += kLanes)
    acc = add_widened(acc, _mm256_abs_epi32(deviations(word.data(), i)));
  std::int64_t sum = hsum_epi64(acc);
  for (std::size_t i = body; i < n; ++i) {
    const std::int64_t d = word[i] - static_cast<std::int64_t>(i + 1);
    sum += d < 0 ? -d : d;
  }
  return sum;
}

std::int64_t squared_deviation_sum(std::span<const int> word) {
  const std::size_t n = word.size();
  const std::size_t body = n - n % kLanes;
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t i = 0; i < body; i += kLanes) {
    const __m256i d = deviations(word.data(), i);
    // mul_epi32 multiplies the signed low halves of each 64-bit lane.
    const __m256i even = _mm256_mul_epi32(d, d);
    const __m256i odd_lanes = _mm256_srli_epi64(d, 32);
    const __m256i odd = _mm256_mul_epi32(odd_lanes, odd_lanes);
    acc = _mm256_add_epi64(acc, _mm256_add_epi64(even, odd));
  }
  std::int64_t sum = hsum_epi64(acc);
  for (std::size_t i = body; i < n; ++i) {
    const std::int64_t d = word[i] - static_cast<std::int64_t>(i + 1);
    sum += d * d;
  }
  return sum;
}

std::int64_t inversion_count(std::span<const int> word) {
  const std::size_t n = word.size();
  std::int64_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const __m256i pivot = _mm256_set1_epi32(word[i]);
    std::size_t j = i + 1;
    for (; j + kLanes <= n; j += kLanes) {
      const __m256i smaller = _mm256_cmpgt_epi32(pivot, load8(word.data() + j));
      count += std::popcount(
          static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(smaller))));
    }
    for (; j < n; ++j)
      if (word[i] > word[j]) ++count;
  }
  return count;
}

}  // namespace permstat::kernels::avx2
