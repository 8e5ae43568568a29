#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "oracle.hpp"
#include "permstat/enumeration.hpp"

using namespace permstat;
using boost::multiprecision::cpp_int;

namespace {

// Independent closed forms: Catalan by binomials, Motzkin as a sum over
// Catalan numbers, large Schroder via Delannoy-style sums, Fibonacci by
// iteration.
cpp_int binom(int n, int k) {
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
cpp_int catalan_closed(int m) { return binom(2 * m, m) / (m + 1); }
cpp_int motzkin_closed(int m) {
  cpp_int s = 0;
  for (int k = 0; 2 * k <= m; ++k) s += binom(m, 2 * k) * catalan_closed(k);
  return s;
}
cpp_int schroder_closed(int m) {
  cpp_int s = 0;
  for (int k = 0; k <= m; ++k) s += binom(m + k, m - k) * catalan_closed(k);
  return s;
}
cpp_int fib_iter(int m) {
  cpp_int a = 0, b = 1;
  for (int i = 0; i < m; ++i) {
    cpp_int c = a + b;
    a = b;
    b = c;
  }
  return a;
}

std::vector<Permutation> filtered(int n, bool (*keep)(const oracle::Word&)) {
  std::vector<Permutation> out;
  for (const auto& w : oracle::all_words(n))
    if (keep(w)) out.push_back(Permutation::from_one_line(w));
  return out;
}

bool is_cycle_word(const oracle::Word& w) { return oracle::cycles_max_first(w).size() == 1; }

}  // namespace

TEST_CASE("generator sizes") {
  CHECK(generate(PermClass::all, 3).size() == 6);
  CHECK(generate(PermClass::cycles, 4).size() == 6);
  CHECK(generate(PermClass::involutions, 4).size() == 10);
  CHECK(generate(PermClass::all, 0).size() == 1);
  CHECK(generate(PermClass::cycles, 1) == std::vector<Permutation>{Permutation::identity(1)});
}

TEST_CASE("generators stream exactly the class, in lexicographic order") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(generate(PermClass::all, n) == filtered(n, [](const oracle::Word&) { return true; }));
    CHECK(generate(PermClass::involutions, n) == filtered(n, oracle::is_involution));
    CHECK(generate(PermClass::cycles, n) == filtered(n, is_cycle_word));
  }
  for (int n = 1; n <= 6; ++n)
    for (int f = 1; f <= n; ++f) {
      std::vector<Permutation> got;
      for_each_with_first(n, f, [&](const Permutation& p) { got.push_back(p); });
      CHECK(got.size() == static_cast<std::size_t>(std::tgamma(n)));
      CHECK(std::is_sorted(got.begin(), got.end()));
      for (const auto& p : got) CHECK(p(1) == f);
    }
}

TEST_CASE("generator bounds") {
  const auto noop = [](const Permutation&) {};
  CHECK_THROWS_AS(for_each_permutation(PermClass::all, 10, noop), BoundExceeded);
  CHECK_THROWS_AS(for_each_permutation(PermClass::cycles, 13, noop), BoundExceeded);
  CHECK_THROWS_AS(for_each_permutation(PermClass::all, 4, noop, {.all = 3}), BoundExceeded);
  CHECK_THROWS_AS(for_each_permutation(PermClass::all, -1, noop), std::invalid_argument);
  CHECK_THROWS_AS(for_each_with_first(4, 5, noop), std::invalid_argument);
  CHECK_NOTHROW(for_each_permutation(PermClass::involutions, 12, noop));
}

TEST_CASE("class and predicate names") {
  CHECK(parse_perm_class("involutions") == PermClass::involutions);
  CHECK(name(PermClass::cycles) == "cycles");
  CHECK_THROWS_AS(parse_perm_class("derangements"), std::invalid_argument);
  CHECK(parse_census_predicate("length=depth") == CensusPredicate::length_eq_depth);
  CHECK(name(CensusPredicate::length_eq_reflection) == "length=reflection_length");
  CHECK_THROWS_AS(parse_census_predicate("length"), std::invalid_argument);
}

TEST_CASE("reference sequences") {
  CHECK(reference(Sequence::motzkin, 4) == 9);
  CHECK(reference(Sequence::catalan, 0) == 1);
  CHECK(reference(Sequence::schroder_large, 3) == 22);
  CHECK(reference(Sequence::fibonacci, 0) == 0);
  CHECK(reference(Sequence::fibonacci, 13) == 233);
  for (int m = 0; m <= 40; ++m) {
    REQUIRE(reference(Sequence::catalan, m) == catalan_closed(m));
    REQUIRE(reference(Sequence::motzkin, m) == motzkin_closed(m));
    REQUIRE(reference(Sequence::schroder_large, m) == schroder_closed(m));
    REQUIRE(reference(Sequence::fibonacci, m) == fib_iter(m));
  }
  CHECK_THROWS_AS(reference(Sequence::catalan, -1), std::invalid_argument);
}

TEST_CASE("censuses against the brute-force oracle") {
  const std::int64_t eq_reflection[] = {1, 2, 5, 13, 34, 89, 233};
  const std::int64_t eq_depth[] = {1, 2, 5, 14, 42, 132, 429};
  const std::int64_t shallow_all[] = {1, 2, 6, 23, 103, 511, 2719};
  const std::int64_t shallow_inv[] = {1, 2, 4, 9, 21, 51, 127};
  const std::int64_t shallow_cyc[] = {1, 1, 2, 6, 22, 90, 394};
  for (int n = 1; n <= 7; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    const auto [a, b] = census_statistic_equalities(n);
    CHECK(a.count == eq_reflection[i]);
    CHECK(b.count == eq_depth[i]);
    CHECK(census_shallow(PermClass::all, n).count == shallow_all[i]);
    CHECK(census_shallow(PermClass::involutions, n).count == shallow_inv[i]);
    CHECK(census_shallow(PermClass::cycles, n).count == shallow_cyc[i]);

    std::int64_t brute = 0;
    for (const auto& w : oracle::all_words(n)) brute += oracle::is_shallow(w);
    CHECK(brute == shallow_all[i]);
  }
}

TEST_CASE("census rows carry their reference") {
  const auto inv = census_row(PermClass::involutions, CensusPredicate::shallow, 6);
  CHECK(inv.census.count == 51);
  CHECK(inv.sequence == Sequence::motzkin);
  CHECK(*inv.reference == 51);
  CHECK(*inv.match);

  const auto cyc = census_row(PermClass::cycles, CensusPredicate::shallow, 7);
  CHECK(cyc.sequence == Sequence::schroder_large);
  CHECK(*cyc.reference == 394);
  CHECK(*cyc.match);

  const auto one = census_row(PermClass::cycles, CensusPredicate::shallow, 1);
  CHECK_FALSE(one.reference.has_value());
  CHECK_FALSE(one.match.has_value());

  const auto fib = census_row(PermClass::all, CensusPredicate::length_eq_reflection, 5);
  CHECK(fib.sequence == Sequence::fibonacci);
  CHECK(*fib.reference == 34);
  CHECK(*fib.match);

  CHECK_FALSE(census_row(PermClass::all, CensusPredicate::shallow, 4).reference.has_value());
}
