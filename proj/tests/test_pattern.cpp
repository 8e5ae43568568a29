#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "oracle.hpp"
#include "permstat/catalog.hpp"
#include "permstat/enumeration.hpp"
#include "permstat/pattern.hpp"
#include "permstat/pattern_function.hpp"

using namespace permstat;

namespace {

std::vector<int> zero_based_bonds(const VincularPattern& v) {
  std::vector<int> out;
  for (int b : v.bonds()) out.push_back(b - 1);
  return out;
}

std::vector<std::pair<int, int>> cells(const MeshPattern& m) {
  std::vector<std::pair<int, int>> out;
  for (const Cell& c : m.shaded()) out.emplace_back(c.column, c.row);
  return out;
}

std::int64_t oracle_arrow(const ArrowPattern& a, const Permutation& host) {
  const auto values = a.skeleton_values();
  return oracle::count_arrow(a.size(), {values.begin(), values.end()},
                             zero_based_bonds(a.skeleton()), a.arrow().from, a.arrow().to, W(host));
}

}  // namespace

TEST_CASE("pattern grammar") {
  const auto v = parse_vincular("2-31");
  CHECK(std::vector<int>(v.word().begin(), v.word().end()) == std::vector<int>{2, 3, 1});
  CHECK(v.bonds() == std::vector<int>{2});
  CHECK(to_string(v) == "2-31");
  CHECK(parse_vincular("3-1-4-2").is_classical());
  CHECK(parse_vincular("3142").bonds() == std::vector<int>{1, 2, 3});
  CHECK(to_string(parse_vincular(" 41-32 ")) == "41-32");

  const auto a = parse_arrow("(1-23,1>4)");
  CHECK(a.size() == 4);
  CHECK(a.arrow() == Arrow{1, 4});
  CHECK(to_string(a) == "(1-23,1>4)");
  CHECK(to_string(a.skeleton()) == "1-23");
  CHECK(to_string(parse_arrow("(2-13,2>4)").skeleton()) == "2-13");
  CHECK(to_string(parse_arrow("(2-43,2>1)").skeleton()) == "1-32");

  const auto set = parse_pattern_set("{3-1-4-2,2-4-1-3}");
  CHECK(set.size() == 2);
  CHECK(parse_pattern_set("31-42,(12,1>2)").size() == 2);

  CHECK_THROWS_AS(parse_vincular("2-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_vincular("22"), std::invalid_argument);
  CHECK_THROWS_AS(parse_vincular("13"), std::invalid_argument);
  CHECK_THROWS_AS(parse_vincular("1--2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_arrow("(1-3,1>4)"), std::invalid_argument);   // 2 uncovered
  CHECK_THROWS_AS(parse_arrow("(1-2,3>4)"), std::invalid_argument);   // both ends outside
  CHECK_THROWS_AS(parse_arrow("(12)"), std::invalid_argument);
  CHECK_THROWS_AS(MeshPattern({1, 2}, {{3, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(VincularPattern({1, 2}, {2}), std::invalid_argument);
}

TEST_CASE("classical and vincular counts on 421365") {
  const auto host = P("421365");
  CHECK(count_classical(parse_vincular("1-2-3"), host) == 4);
  CHECK(count_classical(parse_vincular("1-2-3-4"), host) == 0);
  CHECK(count_vincular(parse_vincular("12-3"), host) == 2);
  CHECK(count_vincular(parse_vincular("123"), host) == 1);
  CHECK(count_classical(parse_vincular("1"), host) == 6);
  CHECK_THROWS_AS(count_classical(parse_vincular("12"), host), std::invalid_argument);

  auto occ = occurrences(parse_vincular("1-2-3"), host);
  std::sort(occ.begin(), occ.end());
  // 236, 235, 136, 135 as positions
  CHECK(occ == std::vector<Occurrence>{{2, 4, 5}, {2, 4, 6}, {3, 4, 5}, {3, 4, 6}});
  CHECK(occurrences(parse_vincular("12-3"), host) == std::vector<Occurrence>{{3, 4, 5}, {3, 4, 6}});
}

TEST_CASE("pattern of size 1 counts every letter") {
  for (int n = 0; n <= 6; ++n)
    for_each_permutation(PermClass::all, n, [&](const Permutation& p) {
      REQUIRE(count_classical(parse_vincular("1"), p) == n);
    });
}

TEST_CASE("vincular counts match subset enumeration for every pattern of size <= 4, hosts n <= 6") {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& word : oracle::all_words(k)) {
      for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
        std::vector<int> bonds;
        for (int b = 0; b < k - 1; ++b)
          if (mask & (1 << b)) bonds.push_back(b + 1);
        const VincularPattern pat(word, bonds);
        const auto classical = VincularPattern::classical(word);
        for (int n = 0; n <= 6; ++n)
          for_each_permutation(PermClass::all, n, [&](const Permutation& host) {
            REQUIRE(count_vincular(pat, host) ==
                    oracle::count(word, zero_based_bonds(pat), W(host)));
            if (mask == 0) REQUIRE(count_classical(classical, host) == count_vincular(pat, host));
          });
      }
    }
  }
}

TEST_CASE("descents, inversions, and consecutive pairs") {
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(PermClass::all, n, [&](const Permutation& p) {
      REQUIRE(count_vincular(parse_vincular("21"), p) == descent_count(p));
      REQUIRE(count_classical(parse_vincular("2-1"), p) == length(p));
      REQUIRE(count_vincular(parse_vincular("12"), p) + count_vincular(parse_vincular("21"), p) ==
              n - 1);
    });
}

TEST_CASE("mesh counts") {
  CHECK(count_mesh(MeshPattern({1, 2}, {}), P("12")) == 1);
  // Both occurrences 13 and 12 of 132 leave cell (1,1) empty.
  CHECK(count_mesh(MeshPattern({1, 2}, {{1, 1}}), P("132")) == 2);
  CHECK(count_mesh(MeshPattern({1, 2}, {{1, 1}}), P("132")) ==
        oracle::count_mesh({1, 2}, {{1, 1}}, {1, 3, 2}));
  CHECK(count_mesh(MeshPattern({1, 2}, {{0, 0}}), P("213")) == 2);
  CHECK(count_mesh(MeshPattern({1, 2}, {{0, 1}}), P("213")) == 1);

  // Full columns 1 and 3 force the bonds of 14-23.
  const auto m1 = catalog::mesh_1423();
  CHECK(count_mesh(m1, P("243165")) == count_vincular(parse_vincular("14-23"), P("243165")));
  for (int n = 0; n <= 7; ++n)
    for_each_permutation(PermClass::all, n, [&](const Permutation& p) {
      REQUIRE(count_mesh(m1, p) == count_vincular(parse_vincular("14-23"), p));
      REQUIRE(count_mesh(catalog::mesh_2413(), p) == count_vincular(parse_vincular("24-13"), p));
    });
}

TEST_CASE("mesh counts match the rectangle oracle for random shadings") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    auto words = oracle::all_words(k);
    const auto word = words[rng() % words.size()];
    std::vector<Cell> shaded;
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        if (rng() % 4 == 0) shaded.push_back({a, b});
    const MeshPattern m(word, shaded);
    for (int n = 0; n <= 6; ++n)
      for_each_permutation(PermClass::all, n, [&](const Permutation& host) {
        REQUIRE(count_mesh(m, host) == oracle::count_mesh(word, cells(m), W(host)));
      });
  }
}

TEST_CASE("arrow counts: worked example on 63248175") {
  const auto tau = P("63248175");
  const auto ascent = catalog::arrow_ascent();
  CHECK(count_arrow(ascent, tau) == 2);
  CHECK(occurrences(ascent, tau) == std::vector<Occurrence>{{2, 4}, {1, 7}});

  const auto a13 = parse_arrow("(1-3,1>2)");
  bool saw_48 = false;
  for (const auto& o : occurrences(a13, tau)) saw_48 = saw_48 || o == Occurrence{4, 8};
  CHECK(saw_48);
  CHECK(count_arrow(a13, tau) >= 1);
  CHECK(count_arrow(a13, tau) == oracle_arrow(a13, tau));

  for (int n = 0; n <= 6; ++n) {
    CHECK(count_arrow(ascent, Permutation::identity(n)) == 0);
    CHECK(count_vincular(parse_vincular("12"), Permutation::identity(n)) == std::max(0, n - 1));
  }
}

TEST_CASE("arrow counts match value-tuple enumeration, hosts n <= 6") {
  const char* patterns[] = {"(12,1>2)",   "(21,2>1)",   "(1-2,1>2)",  "(1-3,1>2)",
                            "(2-3,1>2)",  "(1-43,1>2)", "(2-43,1>2)", "(1-23,1>4)",
                            "(2-13,2>4)", "(2-43,2>1)", "(1-2,1>3)",  "(1-2,1>1)",
                            "(132,1>3)",  "(1-32,1>4)"};
  for (const char* text : patterns) {
    const auto a = parse_arrow(text);
    for (int n = 0; n <= 6; ++n)
      for_each_permutation(PermClass::all, n, [&](const Permutation& host) {
        INFO(text << " on " << to_string(host));
        REQUIRE(count_arrow(a, host) == oracle_arrow(a, host));
      });
  }
}

TEST_CASE("arrow coincidences hold for all hosts, n <= 7") {
  const auto c21 = parse_arrow("(21,2>1)");
  const auto c2_43 = parse_arrow("(2-43,2>1)");
  const auto c1_2 = parse_arrow("(1-2,1>2)");
  const auto c12 = parse_arrow("(12,1>2)");
  const auto c1_3 = parse_arrow("(1-3,1>2)");
  const auto c2_3 = parse_arrow("(2-3,1>2)");
  const auto c1_43 = parse_arrow("(1-43,1>2)");
  const auto c2_43b = parse_arrow("(2-43,1>2)");
  for (int n = 0; n <= 7; ++n)
    for_each_permutation(PermClass::all, n, [&](const Permutation& t) {
      REQUIRE(count_arrow(c21, t) == count_vincular(parse_vincular("21"), t));
      REQUIRE(count_arrow(c2_43, t) == count_vincular(parse_vincular("21-43"), t));
      REQUIRE(count_arrow(c1_2, t) == count_arrow(c12, t));
      REQUIRE(count_arrow(c1_3, t) == count_arrow(c2_3, t));
      REQUIRE(count_arrow(c1_43, t) == count_arrow(c2_43b, t));
    });
}

TEST_CASE("arrow patterns equal mesh differences for all hosts, n <= 7") {
  for (int n = 0; n <= 7; ++n)
    for_each_permutation(PermClass::all, n, [&](const Permutation& t) {
      REQUIRE(count_arrow(catalog::arrow_1_23(), t) ==
              count_mesh(catalog::mesh_1423(), t) - count_mesh(catalog::mesh_1423_capped(), t));
      REQUIRE(count_arrow(catalog::arrow_2_13(), t) ==
              count_mesh(catalog::mesh_2413(), t) - count_mesh(catalog::mesh_2413_capped(), t));
    });
}

TEST_CASE("contains agrees with count") {
  const Pattern pats[] = {parse_vincular("31-42"), catalog::arrow_2_13(), catalog::mesh_2413_capped()};
  for (int n = 0; n <= 6; ++n)
    for_each_permutation(PermClass::all, n, [&](const Permutation& p) {
      for (const auto& pat : pats) REQUIRE(contains(pat, p) == (count(pat, p) > 0));
    });
}

TEST_CASE("pattern-function evaluation") {
  PatternFunction pairs;
  pairs.add(1, parse_vincular("12")).add(1, parse_vincular("21"));
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(PermClass::all, n, [&](const Permutation& p) {
      REQUIRE(evaluate(pairs, p) == n - 1);
    });

  PatternFunction inv;
  inv.add(1, parse_vincular("2-1"));
  CHECK(evaluate(inv, P("421365")) == 5);

  PatternFunction constant{.constant = 7};
  CHECK(evaluate(constant, P("421365")) == 7);
  CHECK(evaluate(constant, Permutation{}) == 7);

  PatternFunction affine{.constant = 1, .n_coefficient = 2, .reflection_coefficient = -1};
  CHECK(evaluate(affine, P("421365")) == 1 + 12 - 3);

  PatternFunction on_phi{.target = Target::fundamental};
  on_phi.add(1, parse_vincular("21"));
  CHECK(evaluate(on_phi, P("421365")) == descent_count(P("243165")));
}
