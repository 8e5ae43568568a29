#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/// A permutation of [1,n] in one-line notation.
///
/// Positions and values are 1-indexed at the interface: `p(i)` is the image
/// of i. Instances are immutable once constructed; the only way to build one
/// is through a validating factory.
class Permutation {
 public:
  /// The empty permutation of S_0.
  Permutation() = default;

  /// Throws std::invalid_argument unless `word` is a bijection on [1,len].
  static Permutation from_one_line(std::vector<int> word);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// Image of i, for 1 <= i <= size().
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> word() const { return word_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
  std::vector<int> word_;
};

/// Function composition: (a o b)(i) = a(b(i)). Sizes must match.
Permutation compose(const Permutation& a, const Permutation& b);

/// Parses "421365" (digits only, n <= 9) or "4,2,1,3,6,5" (any n).
/// Whitespace around the text is ignored. The empty string is S_0.
Permutation parse_permutation(std::string_view text);

/// Machine form: comma-separated values, e.g. "2,4,3,1,6,5".
std::string to_string(const Permutation& p);

/// Compact digit form when n <= 9, comma form otherwise.
std::string to_compact_string(const Permutation& p);

/// Cycle notation in the standard representation: every cycle starts with its
/// maximum and cycles appear in increasing order of their maxima.
class CycleForm {
 public:
  CycleForm() = default;

  /// Normalizes an arbitrary cycle writing of a permutation of [1,n].
  /// Fixed points may be omitted. Throws std::invalid_argument if the cycles
  /// overlap or mention values outside [1,n].
  static CycleForm from_cycles(int n, std::vector<std::vector<int>> cycles);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  Permutation to_permutation() const;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;

 private:
  friend CycleForm to_standard_cycles(const Permutation& p);
  int n_ = 0;
  std::vector<std::vector<int>> cycles_;
};

CycleForm to_standard_cycles(const Permutation& p);

/// Parses cycle notation such as "(143)(2)(56)" or "(1,4,3)(2)(5,6)".
/// Omitted fixed points are filled in up to `n`.
CycleForm parse_cycles(std::string_view text, int n);

/// "(2)(431)(65)" for n <= 9, "(2)(4,3,1)(6,5)" otherwise.
std::string to_string(const CycleForm& c);

/// The fundamental bijection: erase the parentheses of the standard
/// representation.
Permutation fundamental_map(const Permutation& p);

/// Inverse of the fundamental bijection: cut before every left-to-right
/// maximum and read each block as a cycle.
Permutation fundamental_inverse(const Permutation& t);

int cycle_count(const Permutation& p);
int descent_count(const Permutation& p);

/// Coxeter length (number of inversions).
std::int64_t length(const Permutation& p);
/// n minus the number of cycles.
std::int64_t reflection_length(const Permutation& p);
/// Sum of p(i) - i over excedances.
std::int64_t depth(const Permutation& p);
/// Sum of |p(i) - i|.
std::int64_t displacement(const Permutation& p);
/// Sum of (p(i) - i)^2.
std::int64_t variance(const Permutation& p);

bool is_involution(const Permutation& p);
/// True iff p has exactly one orbit. The identity of S_1 counts as a 1-cycle;
/// S_0 has no cycles.
bool is_cycle(const Permutation& p);

}  // namespace permstat
