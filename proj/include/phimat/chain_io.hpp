#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "duct.hpp"
#include "errors.hpp"

namespace phimat {

/// Parsed chain document: the medium plus an ordered segment list.
///
/// File schema (JSON):
///   {"c": <sound speed m/s>, "segments": [{"S": <area m^2>, "L": <length m>}, ...]}
/// Every value must be positive and finite; at least one segment is required.
struct ChainFile {
  Medium medium;
  std::vector<DuctSegment> segments;
};

namespace detail {

inline double positive_number(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number())
    throw bad_input{std::string{"chain file: missing numeric \""} + key + "\""};
  const double v = j[key].get<double>();
  if (!std::isfinite(v) || v <= 0.0)
    throw bad_input{std::string{"chain file: \""} + key + "\" must be positive and finite"};
  return v;
}

}  // namespace detail

/// Parse a chain document from JSON text. Throws bad_input on anything wrong:
/// syntax, schema, or out-of-domain values.
inline ChainFile parse_chain_text(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw bad_input{"chain file: not valid JSON"};
  if (!doc.is_object()) throw bad_input{"chain file: top level must be an object"};

  ChainFile out;
  out.medium.sound_speed = detail::positive_number(doc, "c");
  if (!doc.contains("segments") || !doc["segments"].is_array() || doc["segments"].empty())
    throw bad_input{"chain file: \"segments\" must be a non-empty array"};
  for (const auto& s : doc["segments"])
    out.segments.push_back({detail::positive_number(s, "S"), detail::positive_number(s, "L")});
  return out;
}

/// Read and parse a chain file from disk. Throws bad_input when the file
/// cannot be read or its content fails parse_chain_text.
inline ChainFile load_chain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bad_input{"chain file: cannot open \"" + path + "\""};
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_chain_text(buf.str());
}

}  // namespace phimat
