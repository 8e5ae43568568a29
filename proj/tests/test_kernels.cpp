#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <numeric>
#include <random>

#include "permstat/enumeration.hpp"
#include "permstat/kernels.hpp"

using namespace permstat;

namespace {

std::vector<kernels::Backend> available_backends() {
  std::vector<kernels::Backend> out{kernels::Backend::scalar};
  if (kernels::cpu_supports(kernels::Backend::avx2)) out.push_back(kernels::Backend::avx2);
  return out;
}

void check_equivalent(std::span<const int> word) {
  const auto& ref = kernels::table(kernels::Backend::scalar);
  for (auto b : available_backends()) {
    const auto& t = kernels::table(b);
    INFO("backend " << kernels::name(b) << " n=" << word.size());
    REQUIRE(t.excedance_sum(word) == ref.excedance_sum(word));
    REQUIRE(t.abs_deviation_sum(word) == ref.abs_deviation_sum(word));
    REQUIRE(t.squared_deviation_sum(word) == ref.squared_deviation_sum(word));
    REQUIRE(t.inversion_count(word) == ref.inversion_count(word));
  }
}

}  // namespace

TEST_CASE("scalar kernels on hand-checked words") {
  const std::vector<int> w{4, 2, 1, 3, 6, 5};
  CHECK(kernels::scalar::excedance_sum(w) == 4);
  CHECK(kernels::scalar::abs_deviation_sum(w) == 8);
  CHECK(kernels::scalar::squared_deviation_sum(w) == 16);
  CHECK(kernels::scalar::inversion_count(w) == 5);
  CHECK(kernels::scalar::inversion_count({}) == 0);
}

TEST_CASE("every backend matches the scalar reference on all of S_n, n <= 8") {
  for (int n = 0; n <= 8; ++n)
    for_each_permutation(PermClass::all, n, [](const Permutation& p) { check_equivalent(p.word()); });
}

TEST_CASE("every backend matches the scalar reference on long random words") {
  std::mt19937 rng(20241015);
  for (int n : {9, 15, 16, 17, 31, 64, 100, 257, 1000, 4099}) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    for (int rep = 0; rep < 5; ++rep) {
      std::shuffle(w.begin(), w.end(), rng);
      check_equivalent(w);
    }
    std::reverse(w.begin(), w.end());
    std::sort(w.begin(), w.end(), std::greater<>());
    check_equivalent(w);
  }
}

TEST_CASE("squared deviations do not overflow 32-bit lanes") {
  // |p_i - i| up to 99999 squares past 2^31.
  const int n = 100000;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  const auto& ref = kernels::table(kernels::Backend::scalar);
  // sum (n+1-2i)^2 over i = 1..n = (n^3 - n)/3
  const std::int64_t expected = (static_cast<std::int64_t>(n) * n * n - n) / 3;
  CHECK(ref.squared_deviation_sum(w) == expected);
  for (auto b : available_backends()) CHECK(kernels::table(b).squared_deviation_sum(w) == expected);
}

TEST_CASE("dispatch reports a usable backend") {
  const auto& t = kernels::active();
  CHECK(kernels::cpu_supports(t.backend));
  CHECK_NOTHROW(kernels::table(kernels::Backend::scalar));
  if (const char* forced = std::getenv("PERMSTAT_KERNELS"); forced && std::string(forced) == "scalar")
    CHECK(t.backend == kernels::Backend::scalar);
  if (!kernels::cpu_supports(kernels::Backend::avx2))
    CHECK_THROWS_AS(kernels::table(kernels::Backend::avx2), std::runtime_error);
}
