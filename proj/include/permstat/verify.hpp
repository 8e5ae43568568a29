#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/enumeration.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

struct IdentityReport {
  std::string identity;
  int n = 0;
  std::int64_t tested = 0;
  std::int64_t mismatches = 0;
  std::optional<Permutation> counterexample;
};

/// A statement checked pointwise over a permutation class.
struct IdentityCheck {
  std::string name;
  std::string description;
  PermClass klass = PermClass::all;
  std::function<bool(const Permutation&)> holds;
};

/// Every identity the engine knows how to sweep, in a fixed order.
const std::vector<IdentityCheck>& identity_catalog();
const IdentityCheck* find_identity(std::string_view name);

/// Sweeps the class in S_m for every 1 <= m <= n. `threads` = 0 picks the
/// hardware concurrency; the report does not depend on the thread count.
IdentityReport run_identity(const IdentityCheck& check, int n, unsigned threads = 0,
                            const EnumerationBounds& bounds = {});
/// Throws std::invalid_argument for an unknown name.
IdentityReport verify_identity(std::string_view name, int n, unsigned threads = 0,
                               const EnumerationBounds& bounds = {});

}  // namespace permstat
