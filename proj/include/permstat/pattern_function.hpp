#pragma once

#include <cstdint>
#include <vector>

#include "permstat/pattern.hpp"

namespace permstat {

/// Where the pattern counts of a PatternFunction are taken.
enum class Target {
  host,         // count in p itself
  fundamental,  // count in fundamental_map(p)
};

struct Term {
  std::int64_t coefficient = 1;
  Pattern pattern;
};

/// Integer linear combination of pattern counts plus an affine part
/// constant + n_coefficient * n + reflection_coefficient * reflection_length(p).
struct PatternFunction {
  Target target = Target::host;
  std::vector<Term> terms;
  std::int64_t constant = 0;
  std::int64_t n_coefficient = 0;
  std::int64_t reflection_coefficient = 0;

  PatternFunction& add(std::int64_t coefficient, Pattern pattern) {
    terms.push_back({coefficient, std::move(pattern)});
    return *this;
  }
};

std::int64_t evaluate(const PatternFunction& f, const Permutation& p);

}  // namespace permstat
