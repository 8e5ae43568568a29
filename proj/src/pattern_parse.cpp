#include <cctype>
#include <stdexcept>

#include "permstat/pattern.hpp"

namespace permstat {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

struct Skeleton {
  std::vector<int> values;
  std::vector<int> bonds;  // 1-indexed into values
};

// "2-31": hyphens separate blocks, letters inside a block are bonded.
Skeleton parse_skeleton(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty pattern");
  Skeleton s;
  bool block_start = true;
  for (char c : text) {
    if (c == '-') {
      if (block_start) throw std::invalid_argument("empty block in pattern '" + std::string(text) + "'");
      block_start = true;
      continue;
    }
    if (c < '1' || c > '9')
      throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in pattern");
    s.values.push_back(c - '0');
    if (!block_start) s.bonds.push_back(static_cast<int>(s.values.size()) - 1);
    block_start = false;
  }
  if (block_start) throw std::invalid_argument("pattern ends with '-'");
  return s;
}

std::string render_skeleton(std::span<const int> values, const VincularPattern& shape) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && !shape.bonded(static_cast<int>(i))) out += '-';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

VincularPattern parse_vincular(std::string_view text) {
  auto s = parse_skeleton(strip_spaces(text));
  return {std::move(s.values), std::move(s.bonds)};
}

ArrowPattern parse_arrow(std::string_view text) {
  const std::string t = strip_spaces(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw std::invalid_argument("arrow pattern must look like (1-23,1>4)");
  const std::string body = t.substr(1, t.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("arrow pattern needs exactly one ',' before the arrow");
  const std::string arrow = body.substr(comma + 1);
  if (arrow.size() != 3 || arrow[1] != '>' || arrow[0] < '1' || arrow[0] > '9' ||
      arrow[2] < '1' || arrow[2] > '9')
    throw std::invalid_argument("arrow must look like b>c with single digits");
  auto s = parse_skeleton(body.substr(0, comma));
  const Arrow a{arrow[0] - '0', arrow[2] - '0'};
  int k = std::max(a.from, a.to);
  for (int v : s.values) k = std::max(k, v);
  return ArrowPattern(k, std::move(s.values), std::move(s.bonds), a);
}

Pattern parse_pattern(std::string_view text) {
  const std::string t = strip_spaces(text);
  if (!t.empty() && t.front() == '(') return parse_arrow(t);
  return parse_vincular(t);
}

std::vector<Pattern> parse_pattern_set(std::string_view text) {
  std::string t = strip_spaces(text);
  if (!t.empty() && t.front() == '{') {
    if (t.back() != '}') throw std::invalid_argument("unbalanced '{' in pattern set");
    t = t.substr(1, t.size() - 2);
  }
  std::vector<Pattern> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i < t.size() && t[i] == '(') ++depth;
    if (i < t.size() && t[i] == ')') --depth;
    if (i == t.size() || (t[i] == ',' && depth == 0)) {
      out.push_back(parse_pattern(std::string_view(t).substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string to_string(const VincularPattern& p) { return render_skeleton(p.word(), p); }

std::string to_string(const ArrowPattern& p) {
  return "(" + render_skeleton(p.skeleton_values(), p.skeleton()) + "," +
         std::to_string(p.arrow().from) + ">" + std::to_string(p.arrow().to) + ")";
}

std::string to_string(const MeshPattern& p) {
  std::string out;
  for (int v : p.word()) out += std::to_string(v);
  out += '{';
  bool first = true;
  for (const Cell& c : p.shaded()) {
    if (!first) out += ',';
    first = false;
    out += "(" + std::to_string(c.column) + "," + std::to_string(c.row) + ")";
  }
  return out + '}';
}

std::string to_string(const Pattern& p) {
  return std::visit([](const auto& q) { return to_string(q); }, p);
}

}  // namespace permstat
