#include "permstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "permstat/kernels.hpp"

namespace permstat {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  return value;
}

std::vector<int> parse_word(std::string_view text) {
  text = trim(text);
  std::vector<int> word;
  if (text.empty()) return word;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("compact permutation text may only contain digits 1-9");
      word.push_back(c - '0');
    }
    return word;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    word.push_back(parse_int(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

}  // namespace

Permutation Permutation::from_one_line(std::vector<int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(word.size() + 1, false);
  for (int v : word) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) + " outside [1," +
                                  std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("repeated value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(word));
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i)
    inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> word(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) word[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation::from_one_line(std::move(word));
}

Permutation parse_permutation(std::string_view text) {
  return Permutation::from_one_line(parse_word(text));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int v : p.word()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string to_compact_string(const Permutation& p) {
  if (p.size() > 9) return to_string(p);
  std::string out;
  for (int v : p.word()) out += static_cast<char>('0' + v);
  return out;
}

CycleForm CycleForm::from_cycles(int n, std::vector<std::vector<int>> cycles) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) image[static_cast<std::size_t>(i)] = i;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int v = cycle[i];
      if (v < 1 || v > n)
        throw std::invalid_argument("cycle value " + std::to_string(v) + " outside [1," +
                                    std::to_string(n) + "]");
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("value " + std::to_string(v) + " appears twice");
      seen[static_cast<std::size_t>(v)] = true;
      image[static_cast<std::size_t>(v)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return to_standard_cycles(
      Permutation::from_one_line(std::vector<int>(image.begin() + 1, image.end())));
}

Permutation CycleForm::to_permutation() const {
  std::vector<int> word(static_cast<std::size_t>(n_));
  for (const auto& cycle : cycles_)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      word[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
  return Permutation::from_one_line(std::move(word));
}

CycleForm to_standard_cycles(const Permutation& p) {
  // Scanning values downward, the first unvisited value of an orbit is its maximum.
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int m = n; m >= 1; --m) {
    if (seen[static_cast<std::size_t>(m)]) continue;
    std::vector<int> cycle;
    for (int x = m; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  std::reverse(cycles.begin(), cycles.end());
  CycleForm form;
  form.n_ = n;
  form.cycles_ = std::move(cycles);
  return form;
}

CycleForm parse_cycles(std::string_view text, int n) {
  text = trim(text);
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced '('");
    cycles.push_back(parse_word(text.substr(i + 1, close - i - 1)));
    i = close + 1;
  }
  return CycleForm::from_cycles(n, std::move(cycles));
}

std::string to_string(const CycleForm& c) {
  const bool compact = c.size() <= 9;
  std::string out;
  for (const auto& cycle : c.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation fundamental_map(const Permutation& p) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(p.size()));
  const CycleForm form = to_standard_cycles(p);
  for (const auto& cycle : form.cycles())
    word.insert(word.end(), cycle.begin(), cycle.end());
  return Permutation::from_one_line(std::move(word));
}

Permutation fundamental_inverse(const Permutation& t) {
  const auto w = t.word();
  std::vector<int> image(w.size());
  std::size_t start = 0;
  int running_max = 0;
  auto close_block = [&](std::size_t end) {
    for (std::size_t i = start; i < end; ++i)
      image[static_cast<std::size_t>(w[i] - 1)] = w[i + 1 < end ? i + 1 : start];
  };
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > running_max) {
      if (i > 0) close_block(i);
      start = i;
      running_max = w[i];
    }
  }
  if (!w.empty()) close_block(w.size());
  return Permutation::from_one_line(std::move(image));
}

int cycle_count(const Permutation& p) {
  return static_cast<int>(to_standard_cycles(p).cycles().size());
}

int descent_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) ++count;
  return count;
}

std::int64_t length(const Permutation& p) { return kernels::active().inversion_count(p.word()); }

std::int64_t reflection_length(const Permutation& p) { return p.size() - cycle_count(p); }

std::int64_t depth(const Permutation& p) { return kernels::active().excedance_sum(p.word()); }

std::int64_t displacement(const Permutation& p) {
  return kernels::active().abs_deviation_sum(p.word());
}

std::int64_t variance(const Permutation& p) {
  return kernels::active().squared_deviation_sum(p.word());
}

bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(p(i)) != i) return false;
  return true;
}

bool is_cycle(const Permutation& p) { return p.size() >= 1 && cycle_count(p) == 1; }

}  // namespace permstat
