#include "permstat/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace permstat {
namespace {

void require_permutation_word(std::span<const int> word, const char* what) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i + 1))
      throw std::invalid_argument(std::string(what) + ": word is not a permutation of [1,k]");
}

std::vector<int> standardize(std::span<const int> values) {
  std::vector<int> order(values.begin(), values.end());
  std::sort(order.begin(), order.end());
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : values)
    out.push_back(static_cast<int>(std::lower_bound(order.begin(), order.end(), v) -
                                   order.begin()) + 1);
  return out;
}

// Backtracking over increasing host positions with bond pruning. Each newly
// placed letter is checked only against its nearest already-placed neighbours
// in value, which pins its relative order against every earlier letter.
class VincularMatcher {
 public:
  VincularMatcher(const VincularPattern& pattern, std::span<const int> host)
      : pattern_(pattern), host_(host), k_(pattern.size()), n_(static_cast<int>(host.size())),
        positions_(static_cast<std::size_t>(k_)),
        below_(static_cast<std::size_t>(k_), -1), above_(static_cast<std::size_t>(k_), -1) {
    const auto w = pattern.word();
    for (int j = 0; j < k_; ++j) {
      for (int l = 0; l < j; ++l) {
        auto& lo = below_[static_cast<std::size_t>(j)];
        auto& hi = above_[static_cast<std::size_t>(j)];
        if (w[l] < w[j] && (lo < 0 || w[l] > w[lo])) lo = l;
        if (w[l] > w[j] && (hi < 0 || w[l] < w[hi])) hi = l;
      }
    }
  }

  // visit(std::span<const int> zero_based_positions) -> bool (false stops).
  template <class Visit>
  void run(Visit&& visit) {
    if (k_ > n_) return;
    step(0, 0, visit);
  }

 private:
  template <class Visit>
  bool step(int j, int from, Visit& visit) {
    if (j == k_) return visit(std::span<const int>(positions_));
    int lo = from;
    int hi = n_ - (k_ - j);
    if (j > 0 && pattern_.bonded(j)) hi = std::min(hi, lo);
    const int below = below_[static_cast<std::size_t>(j)];
    const int above = above_[static_cast<std::size_t>(j)];
    for (int i = lo; i <= hi; ++i) {
      const int v = host_[static_cast<std::size_t>(i)];
      if (below >= 0 && host_[static_cast<std::size_t>(positions_[static_cast<std::size_t>(below)])] > v)
        continue;
      if (above >= 0 && host_[static_cast<std::size_t>(positions_[static_cast<std::size_t>(above)])] < v)
        continue;
      positions_[static_cast<std::size_t>(j)] = i;
      if (!step(j + 1, i + 1, visit)) return false;
    }
    return true;
  }

  const VincularPattern& pattern_;
  std::span<const int> host_;
  int k_;
  int n_;
  std::vector<int> positions_;
  std::vector<int> below_;
  std::vector<int> above_;
};

bool mesh_regions_empty(const MeshPattern& pattern, std::span<const int> host,
                        std::span<const int> positions) {
  const int k = pattern.size();
  const int n = static_cast<int>(host.size());
  std::vector<int> cols(static_cast<std::size_t>(k) + 2);
  std::vector<int> rows(static_cast<std::size_t>(k) + 2);
  cols.front() = rows.front() = 0;
  cols.back() = rows.back() = n + 1;
  for (int j = 0; j < k; ++j) {
    cols[static_cast<std::size_t>(j) + 1] = positions[static_cast<std::size_t>(j)] + 1;
    rows[static_cast<std::size_t>(j) + 1] = host[static_cast<std::size_t>(positions[static_cast<std::size_t>(j)])];
  }
  std::sort(rows.begin() + 1, rows.end() - 1);
  for (const Cell& cell : pattern.shaded()) {
    const int left = cols[static_cast<std::size_t>(cell.column)];
    const int right = cols[static_cast<std::size_t>(cell.column) + 1];
    const int bottom = rows[static_cast<std::size_t>(cell.row)];
    const int top = rows[static_cast<std::size_t>(cell.row) + 1];
    for (int q = left + 1; q < right; ++q) {
      const int v = host[static_cast<std::size_t>(q - 1)];
      if (bottom < v && v < top) return false;
    }
  }
  return true;
}

// Fills the k-tuple x_1 < ... < x_k from a skeleton occurrence and the arrow;
// returns false if the arrow fails or the tuple is not strictly increasing.
class ArrowChecker {
 public:
  ArrowChecker(const ArrowPattern& pattern, const Permutation& host)
      : pattern_(pattern),
        sigma_(fundamental_inverse(host)),
        sigma_inv_(sigma_.inverse()),
        x_(static_cast<std::size_t>(pattern.size()) + 1) {}

  bool accept(std::span<const int> host, std::span<const int> positions) {
    std::fill(x_.begin(), x_.end(), 0);
    const auto values = pattern_.skeleton_values();
    for (std::size_t l = 0; l < values.size(); ++l)
      x_[static_cast<std::size_t>(values[l])] = host[static_cast<std::size_t>(positions[l])];
    const Arrow a = pattern_.arrow();
    int& from = x_[static_cast<std::size_t>(a.from)];
    int& to = x_[static_cast<std::size_t>(a.to)];
    if (from != 0 && to != 0) {
      if (sigma_(from) != to) return false;
    } else if (from != 0) {
      to = sigma_(from);
    } else {
      from = sigma_inv_(to);
    }
    for (std::size_t b = 2; b < x_.size(); ++b)
      if (x_[b - 1] >= x_[b]) return false;
    return true;
  }

  std::vector<int> omega(std::span<const int> host, std::span<const int> positions) const {
    std::vector<int> out;
    for (int p : positions) out.push_back(host[static_cast<std::size_t>(p)]);
    return out;
  }

 private:
  const ArrowPattern& pattern_;
  Permutation sigma_;
  Permutation sigma_inv_;
  std::vector<int> x_;
};

// Visits occurrences of any pattern kind; visit(Occurrence-ish span) -> bool.
template <class Visit>
void for_each_occurrence(const Pattern& pattern, const Permutation& host, Visit&& visit) {
  const auto w = host.word();
  if (const auto* v = std::get_if<VincularPattern>(&pattern)) {
    VincularMatcher(*v, w).run([&](std::span<const int> pos) {
      std::vector<int> out(pos.begin(), pos.end());
      for (int& p : out) ++p;
      return visit(std::move(out));
    });
  } else if (const auto* m = std::get_if<MeshPattern>(&pattern)) {
    const auto skeleton = VincularPattern::classical({m->word().begin(), m->word().end()});
    VincularMatcher(skeleton, w).run([&](std::span<const int> pos) {
      if (!mesh_regions_empty(*m, w, pos)) return true;
      std::vector<int> out(pos.begin(), pos.end());
      for (int& p : out) ++p;
      return visit(std::move(out));
    });
  } else {
    const auto& a = std::get<ArrowPattern>(pattern);
    ArrowChecker checker(a, host);
    VincularMatcher(a.skeleton(), w).run([&](std::span<const int> pos) {
      if (!checker.accept(w, pos)) return true;
      return visit(checker.omega(w, pos));
    });
  }
}

}  // namespace

VincularPattern::VincularPattern(std::vector<int> word, std::vector<int> bonds)
    : word_(std::move(word)), bond_after_(word_.size(), false) {
  require_permutation_word(word_, "vincular pattern");
  for (int b : bonds) {
    if (b < 1 || b >= size())
      throw std::invalid_argument("bond index " + std::to_string(b) + " outside [1,k-1]");
    bond_after_[static_cast<std::size_t>(b - 1)] = true;
  }
}

VincularPattern VincularPattern::consecutive(std::vector<int> word) {
  std::vector<int> bonds;
  for (int i = 1; i < static_cast<int>(word.size()); ++i) bonds.push_back(i);
  return {std::move(word), std::move(bonds)};
}

std::vector<int> VincularPattern::bonds() const {
  std::vector<int> out;
  for (int i = 1; i < size(); ++i)
    if (bonded(i)) out.push_back(i);
  return out;
}

bool VincularPattern::is_classical() const {
  return std::none_of(bond_after_.begin(), bond_after_.end(), [](bool b) { return b; });
}

MeshPattern::MeshPattern(std::vector<int> word, std::vector<Cell> shaded)
    : word_(std::move(word)), shaded_(std::move(shaded)) {
  require_permutation_word(word_, "mesh pattern");
  for (const Cell& c : shaded_)
    if (c.column < 0 || c.row < 0 || c.column > size() || c.row > size())
      throw std::invalid_argument("mesh cell (" + std::to_string(c.column) + "," +
                                  std::to_string(c.row) + ") outside the grid");
  std::sort(shaded_.begin(), shaded_.end());
  shaded_.erase(std::unique(shaded_.begin(), shaded_.end()), shaded_.end());
}

bool MeshPattern::is_shaded(int column, int row) const {
  return std::binary_search(shaded_.begin(), shaded_.end(), Cell{column, row});
}

ArrowPattern::ArrowPattern(int k, std::vector<int> skeleton_values,
                           std::vector<int> skeleton_bonds, Arrow arrow)
    : k_(k), values_(std::move(skeleton_values)), arrow_(arrow) {
  if (k < 1) throw std::invalid_argument("arrow pattern size must be positive");
  std::vector<bool> covered(static_cast<std::size_t>(k) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > k) throw std::invalid_argument("arrow skeleton value outside [1,k]");
    if (covered[static_cast<std::size_t>(v)])
      throw std::invalid_argument("arrow skeleton repeats a value");
    covered[static_cast<std::size_t>(v)] = true;
  }
  if (arrow.from < 1 || arrow.from > k || arrow.to < 1 || arrow.to > k)
    throw std::invalid_argument("arrow endpoint outside [1,k]");
  const bool from_in = covered[static_cast<std::size_t>(arrow.from)];
  const bool to_in = covered[static_cast<std::size_t>(arrow.to)];
  if (!from_in && !to_in)
    throw std::invalid_argument("arrow needs at least one endpoint in the vincular part");
  covered[static_cast<std::size_t>(arrow.from)] = true;
  covered[static_cast<std::size_t>(arrow.to)] = true;
  for (int v = 1; v <= k; ++v)
    if (!covered[static_cast<std::size_t>(v)])
      throw std::invalid_argument("arrow pattern does not cover value " + std::to_string(v));
  skeleton_ = VincularPattern(standardize(values_), std::move(skeleton_bonds));
}

std::int64_t count_classical(const VincularPattern& pattern, const Permutation& host) {
  if (!pattern.is_classical())
    throw std::invalid_argument("count_classical: pattern has bonds");
  return count_vincular(pattern, host);
}

std::int64_t count_vincular(const VincularPattern& pattern, const Permutation& host) {
  std::int64_t total = 0;
  VincularMatcher(pattern, host.word()).run([&](std::span<const int>) {
    ++total;
    return true;
  });
  return total;
}

std::int64_t count_mesh(const MeshPattern& pattern, const Permutation& host) {
  std::int64_t total = 0;
  const auto skeleton = VincularPattern::classical({pattern.word().begin(), pattern.word().end()});
  VincularMatcher(skeleton, host.word()).run([&](std::span<const int> pos) {
    if (mesh_regions_empty(pattern, host.word(), pos)) ++total;
    return true;
  });
  return total;
}

std::int64_t count_arrow(const ArrowPattern& pattern, const Permutation& host) {
  std::int64_t total = 0;
  ArrowChecker checker(pattern, host);
  VincularMatcher(pattern.skeleton(), host.word()).run([&](std::span<const int> pos) {
    if (checker.accept(host.word(), pos)) ++total;
    return true;
  });
  return total;
}

std::int64_t count(const Pattern& pattern, const Permutation& host) {
  return std::visit(
      [&](const auto& p) -> std::int64_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, VincularPattern>) return count_vincular(p, host);
        else if constexpr (std::is_same_v<T, MeshPattern>) return count_mesh(p, host);
        else return count_arrow(p, host);
      },
      pattern);
}

bool contains(const Pattern& pattern, const Permutation& host) {
  bool found = false;
  for_each_occurrence(pattern, host, [&](std::vector<int>) {
    found = true;
    return false;
  });
  return found;
}

bool avoids_all(std::span<const Pattern> patterns, const Permutation& host) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Pattern& p) { return contains(p, host); });
}

std::vector<Occurrence> occurrences(const Pattern& pattern, const Permutation& host) {
  std::vector<Occurrence> out;
  for_each_occurrence(pattern, host, [&](std::vector<int> occ) {
    out.push_back(std::move(occ));
    return true;
  });
  return out;
}

}  // namespace permstat
