#include "permstat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "permstat/catalog.hpp"
#include "permstat/identities.hpp"
#include "permstat/pattern.hpp"
#include "permstat/shallow.hpp"

namespace permstat {
namespace {

using catalog::arrow;
using catalog::vincular;

std::int64_t n_of(const Permutation& p) { return p.size(); }

std::vector<IdentityCheck> build_catalog() {
  const auto t = [](const Permutation& p) { return fundamental_map(p); };
  std::vector<IdentityCheck> c;
  auto add = [&](std::string name, std::string description, auto holds,
                 PermClass klass = PermClass::all) {
    c.push_back({std::move(name), std::move(description), klass, std::move(holds)});
  };

  // perm-core
  add("fundamental-roundtrip", "fundamental_inverse(fundamental_map(p)) = p and vice versa",
      [](const Permutation& p) {
        return fundamental_inverse(fundamental_map(p)) == p &&
               fundamental_map(fundamental_inverse(p)) == p;
      });
  add("displacement-twice-depth", "displacement(p) = 2 depth(p)",
      [](const Permutation& p) { return displacement(p) == 2 * depth(p); });
  add("depth-bounds", "(length + reflection_length)/2 <= depth <= length",
      [](const Permutation& p) {
        return 2 * depth(p) >= length(p) + reflection_length(p) && depth(p) <= length(p);
      });

  // pattern-engine
  add("descents", "[21] = number of descents",
      [](const Permutation& p) { return count_vincular(vincular("21"), p) == descent_count(p); });
  add("inversions", "[2-1] = length",
      [](const Permutation& p) { return count_classical(vincular("2-1"), p) == length(p); });
  add("consecutive-pairs", "[12] + [21] = n - 1", [](const Permutation& p) {
    return count_vincular(vincular("12"), p) + count_vincular(vincular("21"), p) == n_of(p) - 1;
  });
  add("arrow-descent", "[(21,2>1)] = [21]", [](const Permutation& p) {
    return count_arrow(arrow("(21,2>1)"), p) == count_vincular(vincular("21"), p);
  });
  add("arrow-2-43", "[(2-43,2>1)] = [21-43]", [](const Permutation& p) {
    return count_arrow(arrow("(2-43,2>1)"), p) == count_vincular(vincular("21-43"), p);
  });
  add("arrow-implied-bond", "[(1-2,1>2)] = [(12,1>2)]", [](const Permutation& p) {
    return count_arrow(arrow("(1-2,1>2)"), p) == count_arrow(arrow("(12,1>2)"), p);
  });
  add("arrow-1-3-vs-2-3", "[(1-3,1>2)] = [(2-3,1>2)]", [](const Permutation& p) {
    return count_arrow(arrow("(1-3,1>2)"), p) == count_arrow(arrow("(2-3,1>2)"), p);
  });
  add("arrow-1-43-vs-2-43", "[(1-43,1>2)] = [(2-43,1>2)]", [](const Permutation& p) {
    return count_arrow(arrow("(1-43,1>2)"), p) == count_arrow(arrow("(2-43,1>2)"), p);
  });
  add("mesh-1-23", "[(1-23,1>4)] = mesh 1423 - capped mesh 1423", [](const Permutation& p) {
    return count_arrow(catalog::arrow_1_23(), p) ==
           count_mesh(catalog::mesh_1423(), p) - count_mesh(catalog::mesh_1423_capped(), p);
  });
  add("mesh-2-13", "[(2-13,2>4)] = mesh 2413 - capped mesh 2413", [](const Permutation& p) {
    return count_arrow(catalog::arrow_2_13(), p) ==
           count_mesh(catalog::mesh_2413(), p) - count_mesh(catalog::mesh_2413_capped(), p);
  });

  // identities
  add("variance-patterns", "2([2-1]+[2-3-1]+[3-1-2]+[3-2-1]) = variance",
      [](const Permutation& p) { return variance_via_patterns(p) == variance(p); });
  add("variance-inversion-gaps", "2 sum over inversions of value gaps = variance",
      [](const Permutation& p) { return variance_via_inversion_gaps(p) == variance(p); });
  add("displacement-phi", "2([21]+[2-31]+[31-2]) on phi = displacement",
      [](const Permutation& p) { return displacement_via_phi(p) == displacement(p); });
  add("reflection-length-arrows", "[21]+[(12,1>2)] on phi = reflection_length",
      [](const Permutation& p) { return reflection_length_via_arrows(p) == reflection_length(p); });
  add("reflection-length-alternating", "alternating left-to-right-maxima series on phi",
      [](const Permutation& p) {
        return reflection_length_via_alternating(p) == reflection_length(p);
      });
  add("depth-arrows", "depth via arrow patterns on phi",
      [](const Permutation& p) { return depth_via_arrows(p) == depth(p); });
  add("length-arrows", "length via arrow patterns on phi",
      [](const Permutation& p) { return length_via_arrows(p) == length(p); });
  add("shallow-defect", "2 depth - length - reflection_length = 2([31-42]+[(2-13,2>4)]) on phi",
      [](const Permutation& p) {
        const auto defect = shallow_defect(p);
        return defect >= 0 && 2 * depth(p) - length(p) - reflection_length(p) == 2 * defect;
      });

  // shallow
  add("shallow-four-way", "direct, vincular, arrow and mesh shallowness agree",
      [](const Permutation& p) {
        const bool d = is_shallow_direct(p);
        return is_shallow_vincular(p) == d && is_shallow_arrow(p) == d && is_shallow_mesh(p) == d;
      });
  add("shallow-involution-chords", "involution shallow iff chords do not cross and phi avoids 31-42",
      [](const Permutation& p) {
        const bool d = is_shallow_direct(p);
        return !has_crossing(involution_chords(p)) == d && is_shallow_involution(p) == d;
      },
      PermClass::involutions);
  add("shallow-cycle", "cycle shallow iff phi avoids 31-42, 24-13 iff phi = n q with q separable",
      [t](const Permutation& p) {
        const bool d = is_shallow_direct(p);
        const Permutation phi = t(p);
        const Permutation q = Permutation::from_one_line({phi.word().begin() + 1, phi.word().end()});
        return is_shallow_cycle(p) == d && phi(1) == p.size() && is_separable(q) == d;
      },
      PermClass::cycles);
  add("cycle-arrow-observation", "for cycles, [(1-23,1>4)] = [14-23] and [(2-13,2>4)] = [24-13] on phi",
      [t](const Permutation& p) {
        const Permutation phi = t(p);
        return count_arrow(catalog::arrow_1_23(), phi) == count_vincular(vincular("14-23"), phi) &&
               count_arrow(catalog::arrow_2_13(), phi) == count_vincular(vincular("24-13"), phi);
      },
      PermClass::cycles);
  add("shallow-cycle-bijection", "shallow cycle <-> separable word roundtrip with conjugation",
      [](const Permutation& p) {
        if (!is_shallow_direct(p)) return true;
        const Permutation q = separable_from_shallow_cycle(p);
        const int n = p.size();
        return shallow_cycle_from_separable(q) == p &&
               conjugate(rotation_cycle(n), extend_fixing_last(q)) == p;
      },
      PermClass::cycles);
  return c;
}

struct ShardResult {
  std::int64_t tested = 0;
  std::int64_t mismatches = 0;
  std::optional<Permutation> counterexample;
};

// Shards run in (m, first letter) order, so the first shard holding a
// counterexample holds the lexicographically first one.
struct Shard {
  int m;
  int first;  // 0 = whole class
};

}  // namespace

const std::vector<IdentityCheck>& identity_catalog() {
  static const std::vector<IdentityCheck> catalog = build_catalog();
  return catalog;
}

const IdentityCheck* find_identity(std::string_view name) {
  for (const auto& c : identity_catalog())
    if (c.name == name) return &c;
  return nullptr;
}

IdentityReport run_identity(const IdentityCheck& check, int n, unsigned threads,
                            const EnumerationBounds& bounds) {
  if (n > bounds.for_class(check.klass))
    throw BoundExceeded("n = " + std::to_string(n) + " exceeds the " +
                        std::string(name(check.klass)) + " bound");
  std::vector<Shard> shards;
  for (int m = 1; m <= n; ++m) {
    if (check.klass == PermClass::all)
      for (int f = 1; f <= m; ++f) shards.push_back({m, f});
    else
      shards.push_back({m, 0});
  }
  std::vector<ShardResult> results(shards.size());
  auto run_shard = [&](std::size_t s) {
    ShardResult& r = results[s];
    auto visit = [&](const Permutation& p) {
      ++r.tested;
      if (!check.holds(p)) {
        ++r.mismatches;
        if (!r.counterexample) r.counterexample = p;
      }
    };
    if (shards[s].first == 0)
      for_each_permutation(check.klass, shards[s].m, visit, bounds);
    else
      for_each_with_first(shards[s].m, shards[s].first, visit, bounds);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, shards.size())));
  if (threads <= 1) {
    for (std::size_t s = 0; s < shards.size(); ++s) run_shard(s);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (std::size_t s = next++; s < shards.size(); s = next++) run_shard(s);
      });
  }

  IdentityReport report{.identity = check.name, .n = n};
  for (const auto& r : results) {
    report.tested += r.tested;
    report.mismatches += r.mismatches;
    if (!report.counterexample && r.counterexample) report.counterexample = r.counterexample;
  }
  return report;
}

IdentityReport verify_identity(std::string_view name, int n, unsigned threads,
                               const EnumerationBounds& bounds) {
  const IdentityCheck* check = find_identity(name);
  if (check == nullptr) throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
  return run_identity(*check, n, threads, bounds);
}

}  // namespace permstat
