#pragma once

// JSON and CSV forms of the engine's result types. Permutations inside JSON
// documents are always written in comma form ("2,4,3,1,6,5").

#include <json.hpp>

#include <string>
#include <vector>

#include "permstat/enumeration.hpp"
#include "permstat/pattern.hpp"
#include "permstat/shallow.hpp"
#include "permstat/verify.hpp"

namespace permstat {

nlohmann::ordered_json to_json(const IdentityReport& r);
nlohmann::ordered_json to_json(const ChordDiagram& d);
nlohmann::ordered_json to_json(const CoincidenceVerdict& v);
nlohmann::ordered_json to_json(const CensusRow& row);
nlohmann::ordered_json to_json(const MeshPattern& m);
nlohmann::ordered_json occurrences_to_json(const std::vector<Occurrence>& occ);

/// {"word": [1,4,2,3], "shaded": [[1,0],[1,1],...]}. Throws
/// std::invalid_argument on a malformed document.
MeshPattern mesh_from_json(const nlohmann::json& j);

inline constexpr const char* kCensusCsvHeader = "class,n,predicate,count,reference,match";
std::string to_csv(const CensusRow& row);

}  // namespace permstat
