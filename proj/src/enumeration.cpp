#include "permstat/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permstat/shallow.hpp"

namespace permstat {
namespace {

using boost::multiprecision::cpp_int;

void check_bound(PermClass c, int n, const EnumerationBounds& bounds) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  if (n > bounds.for_class(c))
    throw BoundExceeded("n = " + std::to_string(n) + " exceeds the " + std::string(name(c)) +
                        " bound " + std::to_string(bounds.for_class(c)));
}

void all_permutations(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Permutation::from_one_line(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

// Position i is the smallest unassigned position, and every value below i is
// already used, so the choices in increasing order are i itself (fixed point)
// and then each free j > i (the transposition (i j)).
class InvolutionBuilder {
 public:
  InvolutionBuilder(int n, const std::function<void(const Permutation&)>& visit)
      : n_(n), word_(static_cast<std::size_t>(n), 0), visit_(visit) {}

  void run() { extend(1); }

 private:
  void extend(int i) {
    while (i <= n_ && at(i) != 0) ++i;
    if (i > n_) {
      visit_(Permutation::from_one_line(word_));
      return;
    }
    at(i) = i;
    extend(i + 1);
    at(i) = 0;
    for (int j = i + 1; j <= n_; ++j) {
      if (at(j) != 0) continue;
      at(i) = j;
      at(j) = i;
      extend(i + 1);
      at(i) = at(j) = 0;
    }
  }

  int& at(int i) { return word_[static_cast<std::size_t>(i - 1)]; }

  int n_;
  std::vector<int> word_;
  const std::function<void(const Permutation&)>& visit_;
};

// Fills positions left to right, refusing any value that would close a cycle
// before all n positions are assigned. Partial assignments form disjoint
// paths; head_of[tail] gives the start of the path ending at `tail`.
class CycleBuilder {
 public:
  CycleBuilder(int n, const std::function<void(const Permutation&)>& visit)
      : n_(n),
        word_(static_cast<std::size_t>(n), 0),
        used_(static_cast<std::size_t>(n) + 1, false),
        head_of_(static_cast<std::size_t>(n) + 1),
        tail_of_(static_cast<std::size_t>(n) + 1),
        visit_(visit) {
    std::iota(head_of_.begin(), head_of_.end(), 0);
    std::iota(tail_of_.begin(), tail_of_.end(), 0);
  }

  void run() {
    if (n_ == 1) {
      visit_(Permutation::identity(1));
      return;
    }
    extend(1);
  }

 private:
  void extend(int i) {
    if (i > n_) {
      visit_(Permutation::from_one_line(word_));
      return;
    }
    const int head = head_of_[static_cast<std::size_t>(i)];  // path ... -> i starts here
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || v == i) continue;
      if (v == head && i != n_) continue;
      // Link i -> v: the path head..i joins v..tail(v).
      const int tail = tail_of_[static_cast<std::size_t>(v)];
      word_[static_cast<std::size_t>(i - 1)] = v;
      used_[static_cast<std::size_t>(v)] = true;
      const int old_head_of_tail = head_of_[static_cast<std::size_t>(tail)];
      const int old_tail_of_head = tail_of_[static_cast<std::size_t>(head)];
      head_of_[static_cast<std::size_t>(tail)] = head;
      tail_of_[static_cast<std::size_t>(head)] = tail;
      extend(i + 1);
      head_of_[static_cast<std::size_t>(tail)] = old_head_of_tail;
      tail_of_[static_cast<std::size_t>(head)] = old_tail_of_head;
      used_[static_cast<std::size_t>(v)] = false;
      word_[static_cast<std::size_t>(i - 1)] = 0;
    }
  }

  int n_;
  std::vector<int> word_;
  std::vector<bool> used_;
  std::vector<int> head_of_;
  std::vector<int> tail_of_;
  const std::function<void(const Permutation&)>& visit_;
};

}  // namespace

std::string_view name(PermClass c) {
  switch (c) {
    case PermClass::all: return "all";
    case PermClass::involutions: return "involutions";
    case PermClass::cycles: return "cycles";
  }
  return "unknown";
}

PermClass parse_perm_class(std::string_view text) {
  for (PermClass c : {PermClass::all, PermClass::involutions, PermClass::cycles})
    if (name(c) == text) return c;
  throw std::invalid_argument("unknown permutation class '" + std::string(text) + "'");
}

int EnumerationBounds::for_class(PermClass c) const {
  switch (c) {
    case PermClass::all: return all;
    case PermClass::involutions: return involutions;
    case PermClass::cycles: return cycles;
  }
  return 0;
}

void for_each_permutation(PermClass c, int n, const std::function<void(const Permutation&)>& visit,
                          const EnumerationBounds& bounds) {
  check_bound(c, n, bounds);
  switch (c) {
    case PermClass::all: all_permutations(n, visit); break;
    case PermClass::involutions: InvolutionBuilder(n, visit).run(); break;
    case PermClass::cycles:
      if (n >= 1) CycleBuilder(n, visit).run();
      break;
  }
}

void for_each_with_first(int n, int first, const std::function<void(const Permutation&)>& visit,
                         const EnumerationBounds& bounds) {
  check_bound(PermClass::all, n, bounds);
  if (first < 1 || first > n) throw std::invalid_argument("first letter outside [1,n]");
  std::vector<int> word{first};
  for (int v = 1; v <= n; ++v)
    if (v != first) word.push_back(v);
  do {
    visit(Permutation::from_one_line(word));
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

std::vector<Permutation> generate(PermClass c, int n, const EnumerationBounds& bounds) {
  std::vector<Permutation> out;
  for_each_permutation(c, n, [&](const Permutation& p) { out.push_back(p); }, bounds);
  return out;
}

std::string_view name(CensusPredicate p) {
  switch (p) {
    case CensusPredicate::shallow: return "shallow";
    case CensusPredicate::length_eq_reflection: return "length=reflection_length";
    case CensusPredicate::length_eq_depth: return "length=depth";
  }
  return "unknown";
}

CensusPredicate parse_census_predicate(std::string_view text) {
  for (CensusPredicate p : {CensusPredicate::shallow, CensusPredicate::length_eq_reflection,
                            CensusPredicate::length_eq_depth})
    if (name(p) == text) return p;
  throw std::invalid_argument("unknown census predicate '" + std::string(text) + "'");
}

bool satisfies(CensusPredicate pred, const Permutation& p) {
  switch (pred) {
    case CensusPredicate::shallow: return is_shallow_direct(p);
    case CensusPredicate::length_eq_reflection: return length(p) == reflection_length(p);
    case CensusPredicate::length_eq_depth: return length(p) == depth(p);
  }
  return false;
}

Census census(PermClass c, CensusPredicate pred, int n, const EnumerationBounds& bounds) {
  Census result{.n = n, .klass = c, .predicate = pred};
  for_each_permutation(c, n, [&](const Permutation& p) {
    if (satisfies(pred, p)) ++result.count;
  }, bounds);
  return result;
}

Census census_shallow(PermClass c, int n, const EnumerationBounds& bounds) {
  return census(c, CensusPredicate::shallow, n, bounds);
}

std::pair<Census, Census> census_statistic_equalities(int n, const EnumerationBounds& bounds) {
  Census reflection{.n = n, .predicate = CensusPredicate::length_eq_reflection};
  Census depth_eq{.n = n, .predicate = CensusPredicate::length_eq_depth};
  for_each_permutation(PermClass::all, n, [&](const Permutation& p) {
    const auto l = length(p);
    if (l == reflection_length(p)) ++reflection.count;
    if (l == depth(p)) ++depth_eq.count;
  }, bounds);
  return {reflection, depth_eq};
}

std::string_view name(Sequence s) {
  switch (s) {
    case Sequence::motzkin: return "motzkin";
    case Sequence::schroder_large: return "schroder_large";
    case Sequence::fibonacci: return "fibonacci";
    case Sequence::catalan: return "catalan";
  }
  return "unknown";
}

cpp_int reference(Sequence s, int index) {
  if (index < 0) throw std::invalid_argument("sequence index must be non-negative");
  switch (s) {
    case Sequence::motzkin: {
      // (m+2) M_m = (2m+1) M_{m-1} + 3(m-1) M_{m-2}
      cpp_int prev2 = 1, prev1 = 1;
      if (index <= 1) return 1;
      for (int m = 2; m <= index; ++m) {
        cpp_int next = ((2 * m + 1) * prev1 + 3 * (m - 1) * prev2) / (m + 2);
        prev2 = prev1;
        prev1 = next;
      }
      return prev1;
    }
    case Sequence::schroder_large: {
      // (m+1) r_m = 3(2m-1) r_{m-1} - (m-2) r_{m-2}
      if (index == 0) return 1;
      cpp_int prev2 = 1, prev1 = 2;
      for (int m = 2; m <= index; ++m) {
        cpp_int next = (3 * (2 * m - 1) * prev1 - (m - 2) * prev2) / (m + 1);
        prev2 = prev1;
        prev1 = next;
      }
      return prev1;
    }
    case Sequence::fibonacci: {
      cpp_int a = 0, b = 1;
      for (int m = 0; m < index; ++m) {
        cpp_int next = a + b;
        a = b;
        b = next;
      }
      return a;
    }
    case Sequence::catalan: {
      // C_{m+1} = C_m * 2(2m+1) / (m+2)
      cpp_int c = 1;
      for (int m = 0; m < index; ++m) c = c * 2 * (2 * m + 1) / (m + 2);
      return c;
    }
  }
  return 0;
}

std::optional<std::pair<Sequence, int>> reference_for(PermClass c, CensusPredicate pred, int n) {
  if (pred == CensusPredicate::shallow) {
    if (c == PermClass::involutions) return std::pair{Sequence::motzkin, n};
    if (c == PermClass::cycles && n >= 2) return std::pair{Sequence::schroder_large, n - 2};
    return std::nullopt;
  }
  if (c != PermClass::all || n < 1) return std::nullopt;
  if (pred == CensusPredicate::length_eq_depth) return std::pair{Sequence::catalan, n};
  return std::pair{Sequence::fibonacci, 2 * n - 1};
}

CensusRow census_row(PermClass c, CensusPredicate pred, int n, const EnumerationBounds& bounds) {
  CensusRow row{.census = census(c, pred, n, bounds)};
  if (const auto ref = reference_for(c, pred, n)) {
    row.sequence = ref->first;
    row.reference = reference(ref->first, ref->second);
    row.match = *row.reference == row.census.count;
  }
  return row;
}

}  // namespace permstat
