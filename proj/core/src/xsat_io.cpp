#include "sumplete/xsat_io.hpp"

#include <string>

#include "json_util.hpp"
#include "sumplete/error.hpp"
#include "text_reader.hpp"

namespace sumplete {

namespace {

using detail::Json;
using detail::OrderedJson;

// Validates one clause given as 1-based indices and converts it.
Clause make_clause(const std::array<std::int64_t, 3>& raw, std::size_t n,
                   const std::string& where) {
  Clause clause{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (raw[k] < 1 || static_cast<std::uint64_t>(raw[k]) > n) {
      throw Error(ErrorKind::Invariant, where,
                  "variable " + std::to_string(raw[k]) + " outside 1.." +
                      std::to_string(n));
    }
    clause[k] = static_cast<std::uint32_t>(raw[k] - 1);
  }
  if (clause[0] == clause[1] || clause[0] == clause[2] ||
      clause[1] == clause[2]) {
    throw Error(ErrorKind::Invariant, where,
                "clause must contain three distinct variables");
  }
  return clause;
}

std::size_t check_var_count(std::int64_t n, const std::string& where) {
  // Clause members are stored as 32-bit indices.
  if (n < 1 || n > std::int64_t{UINT32_MAX}) {
    throw Error(ErrorKind::Invariant, where, "variable count out of range");
  }
  return static_cast<std::size_t>(n);
}

XsatInstance parse_xsat_text(std::string_view text) {
  detail::TextReader reader(text);
  auto header = reader.expect("header 'p xsat <n> <m>'");
  if (header.tokens.size() != 4 || header.tokens[0] != "p" ||
      header.tokens[1] != "xsat") {
    throw Error(ErrorKind::Syntax, header.where(),
                "expected header 'p xsat <n> <m>'");
  }
  const std::size_t n = check_var_count(
      detail::parse_int(header.tokens[2], header.where()), header.where());
  const auto m = detail::parse_int(header.tokens[3], header.where());
  if (m < 0) {
    throw Error(ErrorKind::Invariant, header.where(),
                "clause count must be non-negative");
  }

  std::vector<Clause> clauses;
  for (std::int64_t i = 0; i < m; ++i) {
    auto line = reader.expect("clause line");
    detail::expect_tokens(line, 3, "variables per clause");
    std::array<std::int64_t, 3> raw{};
    for (std::size_t k = 0; k < 3; ++k) {
      raw[k] = detail::parse_int(line.tokens[k], line.where());
    }
    clauses.push_back(make_clause(raw, n, line.where()));
  }
  reader.expect_end();
  return XsatInstance(n, std::move(clauses));
}

XsatInstance parse_xsat_json(std::string_view text) {
  const Json doc = detail::parse_json(text);
  detail::require_object(doc, {"n_vars", "clauses"});
  const std::size_t n =
      check_var_count(detail::as_int(doc["n_vars"], "n_vars"), "n_vars");
  const Json& arr = detail::as_array(doc["clauses"], "clauses");
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "clauses[" + std::to_string(i + 1) + "]";
    const Json& c = detail::as_array(arr[i], where);
    if (c.size() != 3) {
      throw Error(ErrorKind::Syntax, where,
                  "clause must list exactly 3 variables");
    }
    std::array<std::int64_t, 3> raw{};
    for (std::size_t k = 0; k < 3; ++k) raw[k] = detail::as_int(c[k], where);
    clauses.push_back(make_clause(raw, n, where));
  }
  return XsatInstance(n, std::move(clauses));
}

Assignment parse_assignment_text(std::string_view text) {
  detail::TextReader reader(text);
  auto line = reader.expect("assignment values");
  Assignment a;
  for (auto token : line.tokens) {
    if (token != "0" && token != "1") {
      throw Error(ErrorKind::Syntax, line.where(),
                  "assignment value must be 0 or 1, got '" +
                      std::string(token) + "'");
    }
    a.values.push_back(token == "1");
  }
  reader.expect_end();
  return a;
}

Assignment parse_assignment_json(std::string_view text) {
  const Json doc = detail::parse_json(text);
  detail::require_object(doc, {"n_vars", "values"});
  const std::size_t n = detail::as_count(doc["n_vars"], "n_vars");
  const Json& arr = detail::as_array(doc["values"], "values");
  if (arr.size() != n) {
    throw Error(ErrorKind::Invariant, "values",
                "expected " + std::to_string(n) + " values, got " +
                    std::to_string(arr.size()));
  }
  Assignment a;
  for (std::size_t j = 0; j < n; ++j) {
    a.values.push_back(
        detail::as_bool(arr[j], "values[" + std::to_string(j + 1) + "]"));
  }
  return a;
}

}  // namespace

XsatInstance parse_xsat(std::string_view text, Format format) {
  return format == Format::Json ? parse_xsat_json(text) : parse_xsat_text(text);
}

std::string serialize_xsat(const XsatInstance& phi, Format format) {
  if (format == Format::Json) {
    OrderedJson doc;
    doc["n_vars"] = phi.n_vars();
    OrderedJson clauses = OrderedJson::array();
    for (const auto& c : phi.clauses()) {
      clauses.push_back({std::uint64_t{c[0]} + 1, std::uint64_t{c[1]} + 1,
                         std::uint64_t{c[2]} + 1});
    }
    doc["clauses"] = std::move(clauses);
    return doc.dump() + "\n";
  }
  std::string out = "p xsat " + std::to_string(phi.n_vars()) + " " +
                    std::to_string(phi.clauses().size()) + "\n";
  for (const auto& c : phi.clauses()) {
    out += std::to_string(c[0] + 1) + " " + std::to_string(c[1] + 1) + " " +
           std::to_string(c[2] + 1) + "\n";
  }
  return out;
}

Assignment parse_assignment(std::string_view text, Format format) {
  return format == Format::Json ? parse_assignment_json(text)
                                : parse_assignment_text(text);
}

std::string serialize_assignment(const Assignment& a, Format format) {
  if (format == Format::Json) {
    OrderedJson doc;
    doc["n_vars"] = a.values.size();
    OrderedJson values = OrderedJson::array();
    for (bool v : a.values) values.push_back(v);
    doc["values"] = std::move(values);
    return doc.dump() + "\n";
  }
  std::string out;
  for (std::size_t j = 0; j < a.values.size(); ++j) {
    if (j) out += ' ';
    out += a.values[j] ? '1' : '0';
  }
  out += '\n';
  return out;
}

}  // namespace sumplete
