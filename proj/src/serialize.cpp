#include "permstat/serialize.hpp"

#include <stdexcept>

namespace permstat {

using nlohmann::ordered_json;

ordered_json to_json(const IdentityReport& r) {
  ordered_json j{{"identity", r.identity},
                 {"n", r.n},
                 {"tested", r.tested},
                 {"mismatches", r.mismatches}};
  if (r.counterexample) j["counterexample"] = to_string(*r.counterexample);
  return j;
}

ordered_json to_json(const ChordDiagram& d) {
  ordered_json chords = ordered_json::array();
  for (const auto& [a, b] : d.chords) chords.push_back({a, b});
  return {{"n", d.n}, {"chords", chords}};
}

ordered_json to_json(const CoincidenceVerdict& v) {
  ordered_json j{{"bound", v.bound}, {"equal", v.equal}};
  if (v.counterexample) j["counterexample"] = to_string(*v.counterexample);
  return j;
}

ordered_json to_json(const CensusRow& row) {
  ordered_json j{{"class", name(row.census.klass)},
                 {"n", row.census.n},
                 {"predicate", name(row.census.predicate)},
                 {"count", row.census.count}};
  if (row.reference) {
    j["sequence"] = name(*row.sequence);
    j["reference"] = row.reference->str();
    j["match"] = *row.match;
  } else {
    j["reference"] = nullptr;
    j["match"] = nullptr;
  }
  return j;
}

ordered_json to_json(const MeshPattern& m) {
  ordered_json shaded = ordered_json::array();
  for (const Cell& c : m.shaded()) shaded.push_back({c.column, c.row});
  return {{"word", std::vector<int>(m.word().begin(), m.word().end())}, {"shaded", shaded}};
}

ordered_json occurrences_to_json(const std::vector<Occurrence>& occ) {
  ordered_json out = ordered_json::array();
  for (const auto& o : occ) out.push_back(o);
  return out;
}

MeshPattern mesh_from_json(const nlohmann::json& j) {
  try {
    std::vector<Cell> cells;
    for (const auto& cell : j.at("shaded")) {
      if (!cell.is_array() || cell.size() != 2)
        throw std::invalid_argument("mesh cell must be a [column, row] pair");
      cells.push_back({cell[0].get<int>(), cell[1].get<int>()});
    }
    return MeshPattern(j.at("word").get<std::vector<int>>(), std::move(cells));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed mesh pattern: ") + e.what());
  }
}

std::string to_csv(const CensusRow& row) {
  std::string line = std::string(name(row.census.klass)) + "," + std::to_string(row.census.n) +
                     "," + std::string(name(row.census.predicate)) + "," +
                     std::to_string(row.census.count) + ",";
  if (row.reference) line += row.reference->str() + "," + (*row.match ? "true" : "false");
  else line += ",";
  return line;
}

}  // namespace permstat
