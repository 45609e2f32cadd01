#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "steinberg/linkage.hpp"
#include "steinberg/root_data.hpp"
#include "steinberg/simple_a1.hpp"
#include "steinberg/weight_function.hpp"

// JSON shapes:
//   weight        [m1, ..., mn]
//   root system   {"series": "A", "rank": 2}
//   character     {"weights": [{"w": [...], "mult": k}, ...]}
//   class         {"basis": "delta", "terms": [{"w": [...], "coeff": k}, ...]}
// Terms are always emitted in lexicographic order of w. Parsers throw
// ParseError on malformed input.

namespace steinberg {

using nlohmann::json;

json to_json(const Weight& w);
/// A JSON integer array; expected_rank 0 means any rank.
Weight weight_from_json(const json& j, std::size_t expected_rank = 0);
/// "1,-2,3" or "[1,-2,3]".
Weight parse_weight(const std::string& text, std::size_t expected_rank = 0);

json to_json(const RootSystem& rs);
RootSystem root_system_from_json(const json& j);

json to_json(const Character& chi);
Character character_from_json(const json& j, std::size_t expected_rank = 0);

json to_json(const KElement& c);
/// "basis" may be omitted; if present it must be "delta".
KElement class_from_json(const json& j, std::size_t expected_rank = 0);

json to_json(const SimpleClass& c);

json to_json(const AlcovePosition& pos);
json to_json(const std::vector<Block>& blocks);

/// Parses a JSON document, turning syntax errors into ParseError.
json parse_json(const std::string& text);

}  // namespace steinberg
