#pragma once

#include <nlohmann/json.hpp>

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/hash.hpp"
#include "slocc/states/tensor.hpp"

namespace slocc {

namespace detail {
inline constexpr std::size_t kMaxCoefficients = std::size_t{1} << 20;

inline std::size_t schema_count(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  const auto x = v.get<long long>();
  if (x < 2) throw SchemaError(std::string("field '") + key + "' must be >= 2");
  return static_cast<std::size_t>(x);
}
}  // namespace detail

/// Reads a state file: {"n", "d", "entries": [{"idx": [...], "c": "num[/den]"}]}.
/// Unlisted coefficients are zero.
inline Tensor parse_state(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("state document must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "n" && key != "d" && key != "entries") throw SchemaError("unknown field '" + key + "'");
  const std::size_t n = detail::schema_count(doc, "n");
  const std::size_t d = detail::schema_count(doc, "d");
  {
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      size *= d;
      if (size > detail::kMaxCoefficients) throw SchemaError("tensor too large");
    }
  }
  if (!doc.contains("entries") || !doc.at("entries").is_array()) throw SchemaError("'entries' must be an array");

  Tensor t(n, d);
  std::set<std::size_t> seen;
  std::vector<std::size_t> idx(n);
  for (const auto& entry : doc.at("entries")) {
    if (!entry.is_object() || !entry.contains("idx") || !entry.contains("c") || entry.size() != 2)
      throw SchemaError("each entry must be {\"idx\": [...], \"c\": \"...\"}");
    const auto& jidx = entry.at("idx");
    if (!jidx.is_array() || jidx.size() != n) throw SchemaError("entry idx must list exactly n integers");
    for (std::size_t a = 0; a < n; ++a) {
      if (!jidx[a].is_number_integer()) throw SchemaError("entry idx must list integers");
      const auto v = jidx[a].get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= d)
        throw IndexError("index " + std::to_string(v) + " outside [0," + std::to_string(d) + ")");
      idx[a] = static_cast<std::size_t>(v);
    }
    if (!entry.at("c").is_string()) throw SchemaError("coefficient must be a string \"num\" or \"num/den\"");
    const std::size_t flat = t.flat_index(idx);
    if (!seen.insert(flat).second) throw DuplicateIndex("duplicate idx " + jidx.dump());
    t[flat] = parse_rational(entry.at("c").get<std::string>());
  }
  return t;
}

/// Canonical form: entries in lexicographic idx order, zeros omitted.
inline nlohmann::ordered_json state_to_json(const Tensor& t) {
  nlohmann::ordered_json doc;
  doc["n"] = t.n();
  doc["d"] = t.d();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (is_zero(t[f])) continue;
    nlohmann::ordered_json e;
    e["idx"] = t.multi_index(f);
    e["c"] = to_string(t[f]);
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

inline std::string serialize_state(const Tensor& t) { return state_to_json(t).dump(2) + "\n"; }

/// Stable fingerprint of the canonical serialization.
inline std::string state_hash(const Tensor& t) { return fnv1a_hex(state_to_json(t).dump()); }

}  // namespace slocc
