#include "permstat/pattern_function.hpp"

namespace permstat {

std::int64_t evaluate(const PatternFunction& f, const Permutation& p) {
  std::int64_t value = f.constant + f.n_coefficient * p.size();
  if (f.reflection_coefficient != 0) value += f.reflection_coefficient * reflection_length(p);
  if (f.terms.empty()) return value;
  const Permutation counted = f.target == Target::fundamental ? fundamental_map(p) : p;
  for (const Term& t : f.terms) value += t.coefficient * count(t.pattern, counted);
  return value;
}

}  // namespace permstat
