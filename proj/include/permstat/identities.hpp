#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string_view>

#include "permstat/pattern_function.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Statistic { length, variance, displacement, reflection_length, depth };

std::string_view name(Statistic s);
/// Throws std::invalid_argument for an unknown name.
Statistic parse_statistic(std::string_view text);
std::int64_t evaluate(Statistic s, const Permutation& p);

// Pattern-function forms of the statistics. Each is checked against the
// direct definition in perm-core.

/// 2([2-1] + [2-3-1] + [3-1-2] + [3-2-1]) on p.
PatternFunction variance_function();
/// 2([21] + [2-31] + [31-2]) on the fundamental image.
PatternFunction displacement_function();
/// [21] + [(12,1>2)] on the fundamental image.
PatternFunction reflection_length_arrow_function();
/// n - sum_{k=1..n} (-1)^{k-1} sum_{pi in S_k, pi(k)=1} [pi] on the
/// fundamental image. Terms with k > n vanish, so the sum stops at n.
PatternFunction reflection_length_alternating_function(int n);
/// l_T + [2-31] + [41-32] + [31-42] + [(1-23,1>4)] + [(2-13,2>4)].
PatternFunction depth_arrow_function();
/// l_T + 2([2-31] + [41-32] + [(1-23,1>4)]).
PatternFunction length_arrow_function();
/// [31-42] + [(2-13,2>4)].
PatternFunction shallow_defect_function();
/// Same as shallow_defect_function with the arrow replaced by
/// mesh_2413() - mesh_2413_capped().
PatternFunction shallow_defect_mesh_function();

std::int64_t variance_via_patterns(const Permutation& p);
/// 2 * sum over inversions (i,j) of p(i) - p(j).
std::int64_t variance_via_inversion_gaps(const Permutation& p);
std::int64_t displacement_via_phi(const Permutation& p);
std::int64_t reflection_length_via_alternating(const Permutation& p);
std::int64_t reflection_length_via_arrows(const Permutation& p);
std::int64_t depth_via_arrows(const Permutation& p);
std::int64_t length_via_arrows(const Permutation& p);
/// depth - (length + reflection_length)/2, computed from patterns.
std::int64_t shallow_defect(const Permutation& p);

/// sum_{k=1..n} (-1)^{k-1} C(n,k)/k. Throws std::invalid_argument for n < 1.
Rational harmonic_alternating(int n);
/// H_n = sum_{k=1..n} 1/k.
Rational harmonic_number(int n);

/// Exact mean of the statistic over S_n by exhaustive enumeration.
/// Throws BoundExceeded above the enumeration bound for S_n.
Rational expected_value_exact(Statistic s, int n);
/// (n^2-n)/4, (n^3-n)/6, (n^2-1)/3, n - H_n and (n^2-1)/6.
Rational expected_value_closed_form(Statistic s, int n);

}  // namespace permstat
