// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Checks a document against the JSON Schema keywords used by schemas/:
// type, enum, required, properties, additionalProperties (false), items,
// minItems, maxItems, minimum, maximum, minLength, pattern.

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef QPERF_SCHEMA_DIR
#error "QPERF_SCHEMA_DIR must be defined"
#endif

namespace qperf::test {

inline nlohmann::json load_schema(const std::string& name) {
  std::ifstream in(std::string(QPERF_SCHEMA_DIR) + "/" + name + ".schema.json");
  if (!in) throw std::runtime_error("missing schema " + name);
  return nlohmann::json::parse(in);
}

namespace detail {

inline bool has_type(const nlohmann::json& v, const std::string& type) {
  if (type == "null") return v.is_null();
  if (type == "boolean") return v.is_boolean();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "string") return v.is_string();
  if (type == "array") return v.is_array();
  if (type == "object") return v.is_object();
  return false;
}

inline void check(const nlohmann::json& v, const nlohmann::json& s, const std::string& path,
                  std::vector<std::string>& errors) {
  const auto fail = [&](const std::string& what) { errors.push_back(path + ": " + what); };
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
    } else {
      ok = has_type(v, s["type"].get<std::string>());
    }
    if (!ok) {
      fail("expected type " + s["type"].dump() + ", got " + v.type_name());
      return;
    }
  }
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) fail("value " + v.dump() + " not in " + s["enum"].dump());
  }
  if (v.is_number()) {
    const double x = v.get<double>();
    if (s.contains("minimum") && x < s["minimum"].get<double>()) fail("below minimum");
    if (s.contains("maximum") && x > s["maximum"].get<double>()) fail("above maximum");
  }
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    if (s.contains("minLength") && text.size() < s["minLength"].get<std::size_t>()) fail("string too short");
    if (s.contains("pattern") && !std::regex_search(text, std::regex(s["pattern"].get<std::string>()))) {
      fail("string '" + text + "' does not match " + s["pattern"].get<std::string>());
    }
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) fail("too few items");
    if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) fail("too many items");
    if (s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], path + "/" + std::to_string(i), errors);
    }
  }
  if (v.is_object()) {
    if (s.contains("required")) {
      for (const auto& key : s["required"]) {
        if (!v.contains(key.get<std::string>())) fail("missing required '" + key.get<std::string>() + "'");
      }
    }
    const nlohmann::json props = s.value("properties", nlohmann::json::object());
    const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
    for (const auto& [key, value] : v.items()) {
      if (props.contains(key)) {
        check(value, props[key], path + "/" + key, errors);
      } else if (closed) {
        fail("unexpected property '" + key + "'");
      }
    }
  }
}

}  // namespace detail

/// Violations of `schema` by `doc`, empty when valid.
template <typename Doc>
std::vector<std::string> schema_errors(const Doc& doc, const nlohmann::json& schema) {
  std::vector<std::string> errors;
  detail::check(nlohmann::json::parse(doc.dump()), schema, "", errors);
  return errors;
}

inline std::vector<std::string> schema_errors_text(const std::string& body, const nlohmann::json& schema) {
  return schema_errors(nlohmann::json::parse(body), schema);
}

}  // namespace qperf::test
