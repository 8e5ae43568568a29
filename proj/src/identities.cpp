#include "permstat/identities.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permstat/catalog.hpp"
#include "permstat/enumeration.hpp"

namespace permstat {

std::string_view name(Statistic s) {
  switch (s) {
    case Statistic::length: return "length";
    case Statistic::variance: return "variance";
    case Statistic::displacement: return "displacement";
    case Statistic::reflection_length: return "reflection_length";
    case Statistic::depth: return "depth";
  }
  return "unknown";
}

Statistic parse_statistic(std::string_view text) {
  for (Statistic s : {Statistic::length, Statistic::variance, Statistic::displacement,
                      Statistic::reflection_length, Statistic::depth})
    if (name(s) == text) return s;
  throw std::invalid_argument("unknown statistic '" + std::string(text) + "'");
}

std::int64_t evaluate(Statistic s, const Permutation& p) {
  switch (s) {
    case Statistic::length: return length(p);
    case Statistic::variance: return variance(p);
    case Statistic::displacement: return displacement(p);
    case Statistic::reflection_length: return reflection_length(p);
    case Statistic::depth: return depth(p);
  }
  return 0;
}

PatternFunction variance_function() {
  PatternFunction f;
  for (const char* text : {"2-1", "2-3-1", "3-1-2", "3-2-1"})
    f.add(2, catalog::vincular(text));
  return f;
}

PatternFunction displacement_function() {
  PatternFunction f{.target = Target::fundamental};
  for (const char* text : {"21", "2-31", "31-2"}) f.add(2, catalog::vincular(text));
  return f;
}

PatternFunction reflection_length_arrow_function() {
  PatternFunction f{.target = Target::fundamental};
  f.add(1, catalog::vincular("21")).add(1, catalog::arrow_ascent());
  return f;
}

PatternFunction reflection_length_alternating_function(int n) {
  PatternFunction f{.target = Target::fundamental, .n_coefficient = 1};
  for (int k = 1; k <= n; ++k) {
    // Patterns of S_k ending in 1: any arrangement of 2..k followed by 1.
    std::vector<int> head(static_cast<std::size_t>(k - 1));
    std::iota(head.begin(), head.end(), 2);
    const std::int64_t sign = k % 2 == 1 ? -1 : 1;
    do {
      std::vector<int> word = head;
      word.push_back(1);
      f.add(sign, VincularPattern::classical(std::move(word)));
    } while (std::next_permutation(head.begin(), head.end()));
  }
  return f;
}

PatternFunction depth_arrow_function() {
  PatternFunction f{.target = Target::fundamental, .reflection_coefficient = 1};
  for (const char* text : {"2-31", "41-32", "31-42"}) f.add(1, catalog::vincular(text));
  f.add(1, catalog::arrow_1_23()).add(1, catalog::arrow_2_13());
  return f;
}

PatternFunction length_arrow_function() {
  PatternFunction f{.target = Target::fundamental, .reflection_coefficient = 1};
  f.add(2, catalog::vincular("2-31")).add(2, catalog::vincular("41-32"));
  f.add(2, catalog::arrow_1_23());
  return f;
}

PatternFunction shallow_defect_function() {
  PatternFunction f{.target = Target::fundamental};
  f.add(1, catalog::vincular("31-42")).add(1, catalog::arrow_2_13());
  return f;
}

PatternFunction shallow_defect_mesh_function() {
  PatternFunction f{.target = Target::fundamental};
  f.add(1, catalog::vincular("31-42"))
      .add(1, catalog::mesh_2413())
      .add(-1, catalog::mesh_2413_capped());
  return f;
}

std::int64_t variance_via_patterns(const Permutation& p) {
  static const PatternFunction f = variance_function();
  return evaluate(f, p);
}

std::int64_t variance_via_inversion_gaps(const Permutation& p) {
  std::int64_t gaps = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) gaps += p(i) - p(j);
  return 2 * gaps;
}

std::int64_t displacement_via_phi(const Permutation& p) {
  static const PatternFunction f = displacement_function();
  return evaluate(f, p);
}

std::int64_t reflection_length_via_alternating(const Permutation& p) {
  return evaluate(reflection_length_alternating_function(p.size()), p);
}

std::int64_t reflection_length_via_arrows(const Permutation& p) {
  static const PatternFunction f = reflection_length_arrow_function();
  return evaluate(f, p);
}

std::int64_t depth_via_arrows(const Permutation& p) {
  static const PatternFunction f = depth_arrow_function();
  return evaluate(f, p);
}

std::int64_t length_via_arrows(const Permutation& p) {
  static const PatternFunction f = length_arrow_function();
  return evaluate(f, p);
}

std::int64_t shallow_defect(const Permutation& p) {
  static const PatternFunction f = shallow_defect_function();
  return evaluate(f, p);
}

Rational harmonic_alternating(int n) {
  if (n < 1) throw std::invalid_argument("harmonic_alternating needs n >= 1");
  Rational sum = 0;
  BigInt binom = 1;  // C(n, k) built incrementally
  for (int k = 1; k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    const Rational term(binom, BigInt(k));
    sum += k % 2 == 1 ? term : Rational(-term);
  }
  return sum;
}

Rational harmonic_number(int n) {
  Rational sum = 0;
  for (int k = 1; k <= n; ++k) sum += Rational(BigInt(1), BigInt(k));
  return sum;
}

Rational expected_value_exact(Statistic s, int n) {
  if (n < 1) throw std::invalid_argument("expected_value_exact needs n >= 1");
  BigInt total = 0;
  BigInt members = 0;
  for_each_permutation(PermClass::all, n, [&](const Permutation& p) {
    total += evaluate(s, p);
    ++members;
  });
  return Rational(total, members);
}

Rational expected_value_closed_form(Statistic s, int n) {
  const BigInt m = n;
  switch (s) {
    case Statistic::length: return Rational(m * m - m, BigInt(4));
    case Statistic::variance: return Rational(m * m * m - m, BigInt(6));
    case Statistic::displacement: return Rational(m * m - 1, BigInt(3));
    case Statistic::depth: return Rational(m * m - 1, BigInt(6));
    case Statistic::reflection_length: return Rational(m) - harmonic_number(n);
  }
  return 0;
}

}  // namespace permstat
