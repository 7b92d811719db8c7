#pragma once

// Strict accessors over nlohmann::json that turn shape problems into
// sumplete::Error with a field locator.

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sumplete/error.hpp"

namespace sumplete::detail {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Syntax, "byte " + std::to_string(e.byte),
                "malformed JSON");
  }
}

inline const Json& require_object(const Json& doc,
                                  std::initializer_list<const char*> keys) {
  if (!doc.is_object()) {
    throw Error(ErrorKind::Syntax, "document", "expected a JSON object");
  }
  for (const char* key : keys) {
    if (!doc.contains(key)) {
      throw Error(ErrorKind::Syntax, std::string("field '") + key + "'",
                  "missing required field");
    }
  }
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* key : keys) known = known || item.key() == key;
    if (!known) {
      throw Error(ErrorKind::Syntax, "field '" + item.key() + "'",
                  "unknown field");
    }
  }
  return doc;
}

inline std::int64_t as_int(const Json& value, const std::string& where) {
  if (value.is_number_unsigned()) {
    auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw Error(ErrorKind::Invariant, where, "integer out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (value.is_number_integer()) return value.get<std::int64_t>();
  throw Error(ErrorKind::Syntax, where, "expected an integer");
}

inline bool as_bool(const Json& value, const std::string& where) {
  if (!value.is_boolean()) {
    throw Error(ErrorKind::Syntax, where, "expected true or false");
  }
  return value.get<bool>();
}

inline const Json& as_array(const Json& value, const std::string& where) {
  if (!value.is_array()) {
    throw Error(ErrorKind::Syntax, where, "expected an array");
  }
  return value;
}

/// Non-negative integer usable as a size.
inline std::size_t as_count(const Json& value, const std::string& where) {
  auto v = as_int(value, where);
  if (v < 0) throw Error(ErrorKind::Invariant, where, "must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace sumplete::detail
