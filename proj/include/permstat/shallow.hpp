#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "permstat/pattern.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// depth(p) = (length(p) + reflection_length(p)) / 2.
bool is_shallow_direct(const Permutation& p);
/// fundamental_map(p) avoids 5-24-13, 4-25-13 and 31-42.
bool is_shallow_vincular(const Permutation& p);
/// fundamental_map(p) avoids 31-42 and (2-13,2>4).
bool is_shallow_arrow(const Permutation& p);
/// As is_shallow_arrow, with the arrow count taken as the difference of the
/// two 2413 mesh patterns.
bool is_shallow_mesh(const Permutation& p);

/// Points 1..n on a circle; chords are disjoint pairs (a,b) with a < b,
/// kept sorted.
struct ChordDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> chords;
  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

/// One chord per 2-cycle. Throws std::invalid_argument for non-involutions.
ChordDiagram involution_chords(const Permutation& p);
/// Some pair of chords interleaves as a < c < b < d.
bool has_crossing(const ChordDiagram& d);

/// Throws std::invalid_argument for non-involutions.
bool is_shallow_involution(const Permutation& p);
/// Throws std::invalid_argument for non-cycles.
bool is_shallow_cycle(const Permutation& p);

/// Avoids 3-1-4-2 and 2-4-1-3.
bool is_separable(const Permutation& p);

struct CoincidenceVerdict {
  int bound = 0;
  bool equal = true;
  std::optional<Permutation> counterexample;
};

/// Compares the A-avoiding and B-avoiding subsets of S_m for 1 <= m <= n.
/// The counterexample is the first disagreement by size, then lexicographic.
CoincidenceVerdict coincidence_check(std::span<const Pattern> a, std::span<const Pattern> b,
                                     int n);

/// The word n q_1 ... q_{n-1} pulled back through the fundamental bijection:
/// a shallow n-cycle. Throws std::invalid_argument unless q is separable.
Permutation shallow_cycle_from_separable(const Permutation& q);
/// Inverse of shallow_cycle_from_separable: strips the leading n from the
/// fundamental image. Throws unless p is a shallow cycle.
Permutation separable_from_shallow_cycle(const Permutation& p);

/// The n-cycle (n 1 2 ... n-1).
Permutation rotation_cycle(int n);
/// q in S_{n-1} extended to S_n by fixing n.
Permutation extend_fixing_last(const Permutation& q);
/// pi^{-1} tau pi, multiplied left to right: x -> pi(tau(pi^{-1}(x))).
Permutation conjugate(const Permutation& tau, const Permutation& pi);

}  // namespace permstat
