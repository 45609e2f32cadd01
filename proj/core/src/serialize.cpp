#include "steinberg/serialize.hpp"

#include <cctype>
#include <charconv>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

template <class Tag>
json terms_to_json(const FiniteSupport<Tag>& f, const char* value_key) {
  json arr = json::array();
  for (const auto& [w, k] : f.sorted()) arr.push_back({{"w", to_json(w)}, {value_key, k}});
  return arr;
}

template <class Tag>
FiniteSupport<Tag> terms_from_json(const json& arr, const char* value_key, std::size_t rank) {
  if (!arr.is_array()) throw ParseError("expected an array of terms");
  FiniteSupport<Tag> out;
  for (const json& t : arr) {
    if (!t.is_object() || !t.contains("w") || !t.contains(value_key)) {
      throw ParseError(std::string("each term needs \"w\" and \"") + value_key + "\"");
    }
    const json& v = t.at(value_key);
    if (!v.is_number_integer()) throw ParseError(std::string("\"") + value_key + "\" must be an integer");
    const Weight w = weight_from_json(t.at("w"), rank);
    if (rank == 0) rank = w.rank();
    out.add(w, v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

json to_json(const Weight& w) {
  json arr = json::array();
  for (std::int64_t x : w.coords()) arr.push_back(x);
  return arr;
}

Weight weight_from_json(const json& j, std::size_t expected_rank) {
  if (!j.is_array()) throw ParseError("a weight must be a JSON integer array");
  if (j.empty() || j.size() > kMaxRank) throw ParseError("weight has " + std::to_string(j.size()) + " coordinates");
  Weight w(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw ParseError("weight coordinates must be integers");
    w[i] = j[i].get<std::int64_t>();
  }
  if (expected_rank != 0 && w.rank() != expected_rank) {
    throw ParseError("weight " + w.to_string() + " has rank " + std::to_string(w.rank()) + ", expected " +
                     std::to_string(expected_rank));
  }
  return w;
}

Weight parse_weight(const std::string& text, std::size_t expected_rank) {
  std::size_t b = text.find_first_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty weight");
  if (text[b] == '[') return weight_from_json(parse_json(text), expected_rank);

  std::vector<std::int64_t> coords;
  const char* p = text.data() + b;
  const char* end = text.data() + text.size();
  for (;;) {
    while (p < end && *p == ' ') ++p;
    if (p < end && *p == '+') ++p;
    std::int64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) throw ParseError("malformed weight '" + text + "'");
    coords.push_back(v);
    p = next;
    while (p < end && *p == ' ') ++p;
    if (p == end) break;
    if (*p != ',') throw ParseError("malformed weight '" + text + "'");
    ++p;
  }
  if (coords.size() > kMaxRank) throw ParseError("weight '" + text + "' has too many coordinates");
  json j = coords;
  return weight_from_json(j, expected_rank);
}

json to_json(const RootSystem& rs) {
  return {{"series", std::string(1, series_letter(rs.series()))}, {"rank", rs.rank()}};
}

RootSystem root_system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("series") || !j.contains("rank") || !j.at("series").is_string() ||
      !j.at("rank").is_number_integer()) {
    throw ParseError("root system must look like {\"series\":\"A\",\"rank\":2}");
  }
  return RootSystem::build(parse_series(j.at("series").get<std::string>()), j.at("rank").get<int>());
}

json to_json(const Character& chi) { return {{"weights", terms_to_json(chi, "mult")}}; }

Character character_from_json(const json& j, std::size_t expected_rank) {
  if (!j.is_object() || !j.contains("weights")) throw ParseError("character must have a \"weights\" array");
  return terms_from_json<CharacterTag>(j.at("weights"), "mult", expected_rank);
}

json to_json(const KElement& c) { return {{"basis", "delta"}, {"terms", terms_to_json(c, "coeff")}}; }

KElement class_from_json(const json& j, std::size_t expected_rank) {
  if (!j.is_object() || !j.contains("terms")) throw ParseError("class must have a \"terms\" array");
  if (j.contains("basis") && j.at("basis") != "delta") {
    throw ParseError("only the \"delta\" basis is accepted as input");
  }
  return terms_from_json<DeltaBasisTag>(j.at("terms"), "coeff", expected_rank);
}

json to_json(const SimpleClass& c) { return {{"basis", "simple"}, {"terms", terms_to_json(c, "coeff")}}; }

json to_json(const AlcovePosition& pos) {
  return {{"weight", to_json(pos.weight)}, {"wall_pairings", pos.wall_pairings}, {"status", to_string(pos.status)}};
}

json to_json(const std::vector<Block>& blocks) {
  json arr = json::array();
  for (const Block& b : blocks) arr.push_back({{"rep", to_json(b.representative)}, {"component", to_json(b.component)}});
  return arr;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace steinberg
