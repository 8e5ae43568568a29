#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// A pattern word on [1,k] whose consecutive letters may be bonded. A bond at
/// i forces pattern letters i and i+1 onto adjacent host positions. With no
/// bonds this is a classical pattern.
class VincularPattern {
 public:
  VincularPattern() = default;
  /// `bonds` holds indices in [1,k-1]. Throws std::invalid_argument.
  VincularPattern(std::vector<int> word, std::vector<int> bonds);

  static VincularPattern classical(std::vector<int> word) { return {std::move(word), {}}; }
  /// Every pair of neighbours bonded.
  static VincularPattern consecutive(std::vector<int> word);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }
  bool bonded(int i) const { return bond_after_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> bonds() const;
  bool is_classical() const;

  friend bool operator==(const VincularPattern&, const VincularPattern&) = default;

 private:
  std::vector<int> word_;
  std::vector<bool> bond_after_;  // size k; entry k-1 is always false
};

/// Cell (column, row) of the bordered (k+1)x(k+1) grid. Column a lies strictly
/// between the a-th and (a+1)-st occurrence positions; row b strictly between
/// the b-th and (b+1)-st smallest occurrence values. 0 and k are the outer
/// strips.
struct Cell {
  int column = 0;
  int row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class MeshPattern {
 public:
  MeshPattern() = default;
  /// Throws std::invalid_argument for a non-permutation word or a cell outside
  /// [0,k]x[0,k]. Duplicate cells are merged.
  MeshPattern(std::vector<int> word, std::vector<Cell> shaded);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }
  const std::vector<Cell>& shaded() const { return shaded_; }
  bool is_shaded(int column, int row) const;

  friend bool operator==(const MeshPattern&, const MeshPattern&) = default;

 private:
  std::vector<int> word_;
  std::vector<Cell> shaded_;  // sorted, unique
};

/// b -> c: sigma(x_b) = x_c, where sigma is the preimage of the host under the
/// fundamental bijection.
struct Arrow {
  int from = 0;
  int to = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A vincular skeleton on some of the values 1..k plus one arrow. The
/// skeleton values together with the arrow endpoints must cover [1,k], and at
/// least one endpoint must lie in the skeleton.
class ArrowPattern {
 public:
  ArrowPattern() = default;
  /// `skeleton_bonds` indexes the skeleton word, in [1,m-1].
  ArrowPattern(int k, std::vector<int> skeleton_values, std::vector<int> skeleton_bonds,
               Arrow arrow);

  int size() const { return k_; }
  std::span<const int> skeleton_values() const { return values_; }
  /// The skeleton standardized to a vincular pattern on [1,m].
  const VincularPattern& skeleton() const { return skeleton_; }
  Arrow arrow() const { return arrow_; }

  friend bool operator==(const ArrowPattern&, const ArrowPattern&) = default;

 private:
  int k_ = 0;
  std::vector<int> values_;
  VincularPattern skeleton_;
  Arrow arrow_;
};

using Pattern = std::variant<VincularPattern, MeshPattern, ArrowPattern>;

/// Host positions (1-indexed) for vincular and mesh patterns; for arrow
/// patterns, the skeleton values in host order.
using Occurrence = std::vector<int>;

/// Requires an unbonded pattern; throws std::invalid_argument otherwise.
std::int64_t count_classical(const VincularPattern& pattern, const Permutation& host);
std::int64_t count_vincular(const VincularPattern& pattern, const Permutation& host);
std::int64_t count_mesh(const MeshPattern& pattern, const Permutation& host);
/// Counts occurrences in tau = host, with sigma = fundamental_inverse(host).
std::int64_t count_arrow(const ArrowPattern& pattern, const Permutation& host);
std::int64_t count(const Pattern& pattern, const Permutation& host);

/// Early-exit containment test.
bool contains(const Pattern& pattern, const Permutation& host);
bool avoids_all(std::span<const Pattern> patterns, const Permutation& host);

std::vector<Occurrence> occurrences(const Pattern& pattern, const Permutation& host);

/// Text grammar: "2-31" (hyphen separates, juxtaposition bonds) for vincular
/// patterns; "(1-23,1>4)" for arrow patterns. Letters are single digits.
VincularPattern parse_vincular(std::string_view text);
ArrowPattern parse_arrow(std::string_view text);
/// Vincular or arrow, by the leading '('.
Pattern parse_pattern(std::string_view text);
/// Comma-separated list of vincular patterns, optionally wrapped in braces:
/// "{3-1-4-2,2-4-1-3}".
std::vector<Pattern> parse_pattern_set(std::string_view text);

std::string to_string(const VincularPattern& p);
std::string to_string(const ArrowPattern& p);
std::string to_string(const MeshPattern& p);
std::string to_string(const Pattern& p);

}  // namespace permstat
