#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

enum class PermClass { all, involutions, cycles };

std::string_view name(PermClass c);
PermClass parse_perm_class(std::string_view text);

/// Largest n each generator accepts.
struct EnumerationBounds {
  int all = 9;
  int involutions = 12;
  int cycles = 12;

  int for_class(PermClass c) const;
};

class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Streams every member of the class in S_n exactly once, in lexicographic
/// one-line order. Involutions and cycles are built directly rather than
/// filtered from S_n.
void for_each_permutation(PermClass c, int n, const std::function<void(const Permutation&)>& visit,
                          const EnumerationBounds& bounds = {});

/// Members of S_n whose first letter is `first`, in lexicographic order.
void for_each_with_first(int n, int first, const std::function<void(const Permutation&)>& visit,
                         const EnumerationBounds& bounds = {});

std::vector<Permutation> generate(PermClass c, int n, const EnumerationBounds& bounds = {});

enum class CensusPredicate { shallow, length_eq_reflection, length_eq_depth };

std::string_view name(CensusPredicate p);
CensusPredicate parse_census_predicate(std::string_view text);
bool satisfies(CensusPredicate pred, const Permutation& p);

struct Census {
  int n = 0;
  PermClass klass = PermClass::all;
  CensusPredicate predicate = CensusPredicate::shallow;
  std::int64_t count = 0;
};

Census census(PermClass c, CensusPredicate pred, int n, const EnumerationBounds& bounds = {});
Census census_shallow(PermClass c, int n, const EnumerationBounds& bounds = {});
/// {#(l_S = l_T), #(l_S = depth)} over S_n.
std::pair<Census, Census> census_statistic_equalities(int n, const EnumerationBounds& bounds = {});

enum class Sequence { motzkin, schroder_large, fibonacci, catalan };

std::string_view name(Sequence s);
/// Value at `index` (>= 0) computed by recurrence. Offsets: M_0 = M_1 = 1;
/// r_0 = 1, r_1 = 2; F_0 = 0, F_1 = 1; C_0 = 1.
boost::multiprecision::cpp_int reference(Sequence s, int index);

/// The reference value a census row is expected to equal, when one exists:
/// shallow involutions -> motzkin(n); shallow cycles -> schroder_large(n-2);
/// l_S = depth over S_n -> catalan(n); l_S = l_T over S_n -> fibonacci(2n-1).
std::optional<std::pair<Sequence, int>> reference_for(PermClass c, CensusPredicate pred, int n);

struct CensusRow {
  Census census;
  std::optional<Sequence> sequence;
  std::optional<boost::multiprecision::cpp_int> reference;
  /// Empty when there is no reference to compare against.
  std::optional<bool> match;
};

CensusRow census_row(PermClass c, CensusPredicate pred, int n, const EnumerationBounds& bounds = {});

}  // namespace permstat
