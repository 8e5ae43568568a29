#include "permstat/shallow.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstat/catalog.hpp"
#include "permstat/enumeration.hpp"

namespace permstat {
namespace {

const std::vector<Pattern>& shallow_vincular_criteria() {
  static const std::vector<Pattern> patterns{catalog::vincular("5-24-13"),
                                             catalog::vincular("4-25-13"),
                                             catalog::vincular("31-42")};
  return patterns;
}

const std::vector<Pattern>& shallow_arrow_criteria() {
  static const std::vector<Pattern> patterns{catalog::vincular("31-42"), catalog::arrow_2_13()};
  return patterns;
}

const std::vector<Pattern>& cycle_criteria() {
  static const std::vector<Pattern> patterns{catalog::vincular("31-42"),
                                             catalog::vincular("24-13")};
  return patterns;
}

const std::vector<Pattern>& separable_basis() {
  static const std::vector<Pattern> patterns{catalog::vincular("3-1-4-2"),
                                             catalog::vincular("2-4-1-3")};
  return patterns;
}

}  // namespace

bool is_shallow_direct(const Permutation& p) {
  return 2 * depth(p) == length(p) + reflection_length(p);
}

bool is_shallow_vincular(const Permutation& p) {
  return avoids_all(shallow_vincular_criteria(), fundamental_map(p));
}

bool is_shallow_arrow(const Permutation& p) {
  return avoids_all(shallow_arrow_criteria(), fundamental_map(p));
}

bool is_shallow_mesh(const Permutation& p) {
  static const Pattern occupied = catalog::mesh_2413();
  static const Pattern capped = catalog::mesh_2413_capped();
  const Permutation t = fundamental_map(p);
  if (contains(catalog::vincular("31-42"), t)) return false;
  return count(occupied, t) - count(capped, t) == 0;
}

ChordDiagram involution_chords(const Permutation& p) {
  if (!is_involution(p)) throw std::invalid_argument("involution_chords: not an involution");
  ChordDiagram d{.n = p.size()};
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) > i) d.chords.emplace_back(i, p(i));
  return d;
}

bool has_crossing(const ChordDiagram& d) {
  for (const auto& [a, b] : d.chords)
    for (const auto& [c, e] : d.chords)
      if (a < c && c < b && b < e) return true;
  return false;
}

bool is_shallow_involution(const Permutation& p) {
  if (!is_involution(p)) throw std::invalid_argument("is_shallow_involution: not an involution");
  return !contains(catalog::vincular("31-42"), fundamental_map(p));
}

bool is_shallow_cycle(const Permutation& p) {
  if (!is_cycle(p)) throw std::invalid_argument("is_shallow_cycle: not a cycle");
  return avoids_all(cycle_criteria(), fundamental_map(p));
}

bool is_separable(const Permutation& p) { return avoids_all(separable_basis(), p); }

CoincidenceVerdict coincidence_check(std::span<const Pattern> a, std::span<const Pattern> b,
                                     int n) {
  CoincidenceVerdict verdict{.bound = n};
  for (int m = 1; m <= n && verdict.equal; ++m) {
    for_each_permutation(PermClass::all, m, [&](const Permutation& p) {
      if (!verdict.equal) return;
      if (avoids_all(a, p) != avoids_all(b, p)) {
        verdict.equal = false;
        verdict.counterexample = p;
      }
    });
  }
  return verdict;
}

Permutation shallow_cycle_from_separable(const Permutation& q) {
  if (!is_separable(q)) throw std::invalid_argument("shallow_cycle_from_separable: q not separable");
  std::vector<int> word{q.size() + 1};
  word.insert(word.end(), q.word().begin(), q.word().end());
  return fundamental_inverse(Permutation::from_one_line(std::move(word)));
}

Permutation separable_from_shallow_cycle(const Permutation& p) {
  if (!is_cycle(p) || !is_shallow_direct(p))
    throw std::invalid_argument("separable_from_shallow_cycle: not a shallow cycle");
  const Permutation t = fundamental_map(p);
  return Permutation::from_one_line({t.word().begin() + 1, t.word().end()});
}

Permutation rotation_cycle(int n) {
  if (n < 1) throw std::invalid_argument("rotation_cycle needs n >= 1");
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) word[static_cast<std::size_t>(i - 1)] = i + 1;
  word[static_cast<std::size_t>(n - 1)] = 1;
  return Permutation::from_one_line(std::move(word));
}

Permutation extend_fixing_last(const Permutation& q) {
  std::vector<int> word(q.word().begin(), q.word().end());
  word.push_back(q.size() + 1);
  return Permutation::from_one_line(std::move(word));
}

Permutation conjugate(const Permutation& tau, const Permutation& pi) {
  return compose(pi, compose(tau, pi.inverse()));
}

}  // namespace permstat
