#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "oracle.hpp"
#include "permstat/enumeration.hpp"
#include "permstat/pattern.hpp"
#include "permstat/shallow.hpp"

using namespace permstat;

TEST_CASE("shallowness on worked examples") {
  const auto yes = P("53241876");
  CHECK(is_shallow_direct(yes));
  CHECK(is_shallow_vincular(yes));
  CHECK(is_shallow_arrow(yes));
  CHECK(is_shallow_mesh(yes));
  CHECK(is_shallow_involution(yes));

  const auto no = P("63248175");
  CHECK_FALSE(is_shallow_direct(no));
  CHECK_FALSE(is_shallow_vincular(no));
  CHECK_FALSE(is_shallow_arrow(no));
  CHECK_FALSE(is_shallow_mesh(no));
  CHECK_FALSE(is_shallow_involution(no));
}

TEST_CASE("four characterizations agree with the oracle on S_n, n <= 7") {
  for (int n = 0; n <= 7; ++n)
    for_each_permutation(PermClass::all, n, [&](const Permutation& p) {
      const bool d = oracle::is_shallow(W(p));
      REQUIRE(is_shallow_direct(p) == d);
      REQUIRE(is_shallow_vincular(p) == d);
      REQUIRE(is_shallow_arrow(p) == d);
      REQUIRE(is_shallow_mesh(p) == d);
    });
}

TEST_CASE("chord diagrams of involutions") {
  const auto a = involution_chords(P("53241876"));
  CHECK(a == ChordDiagram{8, {{1, 5}, {2, 3}, {6, 8}}});
  CHECK_FALSE(has_crossing(a));
  const auto b = involution_chords(P("63248175"));
  CHECK(b == ChordDiagram{8, {{1, 6}, {2, 3}, {5, 8}}});
  CHECK(has_crossing(b));
  CHECK(involution_chords(Permutation::identity(3)).chords.empty());
  CHECK_THROWS_AS(involution_chords(P("231")), std::invalid_argument);
  CHECK_THROWS_AS(is_shallow_involution(P("231")), std::invalid_argument);
}

TEST_CASE("involutions: shallow iff non-crossing, n <= 9") {
  for (int n = 1; n <= 9; ++n)
    for_each_permutation(PermClass::involutions, n, [&](const Permutation& p) {
      const bool d = oracle::is_shallow(W(p));
      REQUIRE(is_shallow_involution(p) == d);
      REQUIRE(!has_crossing(involution_chords(p)) == d);
    });
}

TEST_CASE("cycles") {
  CHECK(is_shallow_cycle(P("231")));
  CHECK_THROWS_AS(is_shallow_cycle(P("213")), std::invalid_argument);

  bool found = false;
  for_each_permutation(PermClass::cycles, 5, [&](const Permutation& p) {
    if (count_vincular(parse_vincular("24-13"), fundamental_map(p)) > 0) {
      found = true;
      REQUIRE_FALSE(is_shallow_cycle(p));
      REQUIRE_FALSE(oracle::is_shallow(W(p)));
    }
  });
  CHECK(found);

  for (int n = 1; n <= 8; ++n)
    for_each_permutation(PermClass::cycles, n, [&](const Permutation& p) {
      REQUIRE(is_shallow_cycle(p) == oracle::is_shallow(W(p)));
      REQUIRE(fundamental_map(p)(1) == n);
    });
}

TEST_CASE("separable permutations") {
  CHECK(is_separable(P("2413")) == false);
  CHECK(is_separable(P("3142")) == false);
  CHECK(is_separable(P("1234")));
  CHECK(is_separable(P("2143")));
  CHECK(is_separable(P("25314")) == false);
  CHECK(is_separable(Permutation{}));
}

TEST_CASE("shallow cycles from separable words") {
  CHECK(shallow_cycle_from_separable(P("12")) == P("231"));
  CHECK(shallow_cycle_from_separable(P("1")) == P("21"));
  CHECK(separable_from_shallow_cycle(P("231")) == P("12"));
  CHECK_THROWS_AS(shallow_cycle_from_separable(P("2413")), std::invalid_argument);
  CHECK(rotation_cycle(4) == P("2341"));
  CHECK(extend_fixing_last(P("21")) == P("213"));
  CHECK(conjugate(rotation_cycle(3), extend_fixing_last(P("12"))) == P("231"));

  for (int n = 2; n <= 8; ++n) {
    std::int64_t shallow_cycles = 0;
    for_each_permutation(PermClass::cycles, n, [&](const Permutation& p) {
      if (!oracle::is_shallow(W(p))) return;
      ++shallow_cycles;
      const auto q = separable_from_shallow_cycle(p);
      REQUIRE(is_separable(q));
      REQUIRE(shallow_cycle_from_separable(q) == p);
      REQUIRE(conjugate(rotation_cycle(n), extend_fixing_last(q)) == p);
    });
    std::int64_t separable = 0;
    for_each_permutation(PermClass::all, n - 1, [&](const Permutation& q) {
      if (!is_separable(q)) return;
      ++separable;
      REQUIRE(is_shallow_cycle(shallow_cycle_from_separable(q)));
    });
    REQUIRE(shallow_cycles == separable);
  }
}

TEST_CASE("coincidence checks") {
  const auto v1 = coincidence_check(parse_pattern_set("{21}"), parse_pattern_set("{2-1}"), 3);
  CHECK(v1.equal);
  CHECK(v1.bound == 3);
  CHECK_FALSE(v1.counterexample.has_value());

  const auto v2 = coincidence_check(parse_pattern_set("{1-2-3}"), parse_pattern_set("{123}"), 4);
  CHECK_FALSE(v2.equal);
  REQUIRE(v2.counterexample.has_value());
  CHECK(*v2.counterexample == P("1324"));

  const auto v3 = coincidence_check(parse_pattern_set("{3-1-4-2,2-4-1-3}"),
                                    parse_pattern_set("{31-42,24-13}"), 8);
  CHECK(v3.equal);
}
