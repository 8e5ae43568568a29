#include "permstat/kernels.hpp"

#include <cstdlib>

namespace permstat::kernels::scalar {

std::int64_t excedance_sum(std::span<const int> word) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::int64_t d = word[i] - static_cast<std::int64_t>(i + 1);
    if (d > 0) sum += d;
  }
  return sum;
}

std::int64_t abs_deviation_sum(std::span<const int> word) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::int64_t d = word[i] - static_cast<std::int64_t>(i + 1);
    sum += d < 0 ? -d : d;
  }
  return sum;
}

std::int64_t squared_deviation_sum(std::span<const int> word) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::int64_t d = word[i] - static_cast<std::int64_t>(i + 1);
    sum += d * d;
  }
  return sum;
}

std::int64_t inversion_count(std::span<const int> word) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++count;
  return count;
}

}  // namespace permstat::kernels::scalar
