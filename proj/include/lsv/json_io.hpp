#pragma once

#include "lsv/charalg.hpp"
#include "lsv/ktheory.hpp"
#include "lsv/rootdata.hpp"
#include "lsv/weyl.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lsv {

using Json = nlohmann::json;

// Text formats used at every external boundary: weights as comma-separated
// integers in fundamental-weight coordinates ("1,0,2"), reduced words as
// comma-separated 1-based generator indices ("1,2,1"), character coefficients
// as decimal strings.

Vec parse_weight_csv(std::string_view text, int rank);
std::vector<int> parse_word_csv(std::string_view text, int rank);  // to 0-based
std::string format_word(const std::vector<int>& word);             // from 0-based

Json weight_to_json(const Vec& w);
Vec weight_from_json(const Json& j);

// Character: sorted [{"wt": [...], "c": "<decimal>"}]. The zero character is
// the empty array, so parsing it needs the expected dimension; pass dim < 0 to
// infer it from a nonempty payload.
Json character_to_json(const Character& c);
Character character_from_json(const Json& j, int dim = -1);
// BiCharacter: sorted [{"wt1": [...], "wt2": [...], "c": "<decimal>"}].
Json bicharacter_to_json(const BiCharacter& c, int rank);
BiCharacter bicharacter_from_json(const Json& j, int rank = -1);

Json root_system_to_json(const RootSystem& rs);
Json layers_to_json(const std::vector<std::pair<int, Vec>>& layers);
Json diag_class_to_json(const WeylGroup& wg, const DiagonalClass& d);

// Cache document for a generated group: elements in canonical order plus the
// Bruhat matrix. Loading reproduces the canonical ordering byte-identically.
Json weyl_group_to_json(const WeylGroup& wg);
WeylGroup weyl_group_from_json(const Json& j);

}  // namespace lsv
