#include "sumplete/instance_io.hpp"

#include <cctype>
#include <string>

#include "json_util.hpp"
#include "sumplete/error.hpp"
#include "text_reader.hpp"

namespace sumplete {

namespace {

using detail::as_array;
using detail::as_bool;
using detail::as_count;
using detail::as_int;
using detail::Json;
using detail::OrderedJson;

std::string idx(const char* field, std::size_t i) {
  return std::string(field) + "[" + std::to_string(i + 1) + "]";
}

std::string idx(const char* field, std::size_t i, std::size_t j) {
  return idx(field, i) + "[" + std::to_string(j + 1) + "]";
}

void check_text_dims(const detail::TextLine& line, std::int64_t rows,
                     std::int64_t cols) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorKind::Invariant, line.where(),
                "rows and cols must be at least 1");
  }
  if (rows * cols > static_cast<std::int64_t>(kMaxCells) ||
      rows > static_cast<std::int64_t>(kMaxCells) ||
      cols > static_cast<std::int64_t>(kMaxCells)) {
    throw Error(ErrorKind::Invariant, line.where(),
                "grid has more than " + std::to_string(kMaxCells) + " cells");
  }
}

Instance parse_instance_text(std::string_view text) {
  detail::TextReader reader(text);
  auto header = reader.expect("header 'rows cols'");
  detail::expect_tokens(header, 2, "dimensions");
  const auto rows = detail::parse_int(header.tokens[0], header.where());
  const auto cols = detail::parse_int(header.tokens[1], header.where());
  check_text_dims(header, rows, cols);
  const auto r = static_cast<std::size_t>(rows);
  const auto c = static_cast<std::size_t>(cols);

  std::vector<Value> grid;
  grid.reserve(r * c);
  for (std::size_t i = 0; i < r; ++i) {
    auto line = reader.expect("grid row");
    detail::expect_tokens(line, c, "cell values");
    for (std::size_t j = 0; j < c; ++j) {
      const Value v = detail::parse_int(line.tokens[j], line.where());
      if (v < 1 || v > kMaxCellValue) {
        throw Error(ErrorKind::Invariant, line.where() + ", " + idx("grid", i, j),
                    "value " + std::to_string(v) + " outside [1, " +
                        std::to_string(kMaxCellValue) + "]");
      }
      grid.push_back(v);
    }
  }

  auto read_hints = [&](std::size_t count, const char* what) {
    auto line = reader.expect(what);
    detail::expect_tokens(line, count, what);
    std::vector<Value> hints;
    for (auto token : line.tokens) {
      const Value v = detail::parse_int(token, line.where());
      if (v < 0) {
        throw Error(ErrorKind::Invariant, line.where(),
                    std::string(what) + " must be non-negative");
      }
      hints.push_back(v);
    }
    return hints;
  };
  auto row_hints = read_hints(r, "row hints");
  auto col_hints = read_hints(c, "column hints");
  reader.expect_end();
  return Instance(r, c, std::move(grid), std::move(row_hints),
                  std::move(col_hints));
}

Instance parse_instance_json(std::string_view text) {
  const Json doc = detail::parse_json(text);
  detail::require_object(doc, {"rows", "cols", "grid", "row_hints", "col_hints"});
  const auto rows = as_count(doc["rows"], "rows");
  const auto cols = as_count(doc["cols"], "cols");
  if (rows < 1 || cols < 1) {
    throw Error(ErrorKind::Invariant, "rows/cols", "must be at least 1");
  }
  if (rows > kMaxCells || cols > kMaxCells || rows * cols > kMaxCells) {
    throw Error(ErrorKind::Invariant, "rows/cols",
                "grid has more than " + std::to_string(kMaxCells) + " cells");
  }

  const Json& grid_json = as_array(doc["grid"], "grid");
  if (grid_json.size() != rows) {
    throw Error(ErrorKind::Invariant, "grid",
                "expected " + std::to_string(rows) + " rows, got " +
                    std::to_string(grid_json.size()));
  }
  std::vector<Value> grid;
  grid.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = as_array(grid_json[i], idx("grid", i));
    if (row.size() != cols) {
      throw Error(ErrorKind::Invariant, idx("grid", i),
                  "expected " + std::to_string(cols) + " values, got " +
                      std::to_string(row.size()));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      grid.push_back(as_int(row[j], idx("grid", i, j)));
    }
  }

  auto read_hints = [](const Json& arr, const char* field, std::size_t count) {
    as_array(arr, field);
    if (arr.size() != count) {
      throw Error(ErrorKind::Invariant, field,
                  "expected " + std::to_string(count) + " hints, got " +
                      std::to_string(arr.size()));
    }
    std::vector<Value> hints;
    for (std::size_t k = 0; k < count; ++k) {
      hints.push_back(as_int(arr[k], idx(field, k)));
    }
    return hints;
  };
  auto row_hints = read_hints(doc["row_hints"], "row_hints", rows);
  auto col_hints = read_hints(doc["col_hints"], "col_hints", cols);
  return Instance(rows, cols, std::move(grid), std::move(row_hints),
                  std::move(col_hints));
}

Mask parse_mask_text(std::string_view text) {
  detail::TextReader reader(text);
  auto header = reader.expect("header 'rows cols'");
  detail::expect_tokens(header, 2, "dimensions");
  const auto rows = detail::parse_int(header.tokens[0], header.where());
  const auto cols = detail::parse_int(header.tokens[1], header.where());
  check_text_dims(header, rows, cols);
  Mask mask(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < mask.rows(); ++i) {
    auto line = reader.expect("mask row");
    detail::expect_tokens(line, mask.cols(), "keep flags");
    for (std::size_t j = 0; j < mask.cols(); ++j) {
      const auto token = line.tokens[j];
      if (token != "0" && token != "1") {
        throw Error(ErrorKind::Syntax, line.where(),
                    "keep flag must be 0 or 1, got '" + std::string(token) + "'");
      }
      mask.set(i, j, token == "1");
    }
  }
  reader.expect_end();
  return mask;
}

Mask parse_mask_json(std::string_view text) {
  const Json doc = detail::parse_json(text);
  detail::require_object(doc, {"rows", "cols", "keep"});
  const auto rows = as_count(doc["rows"], "rows");
  const auto cols = as_count(doc["cols"], "cols");
  if (rows < 1 || cols < 1 || rows > kMaxCells || cols > kMaxCells ||
      rows * cols > kMaxCells) {
    throw Error(ErrorKind::Invariant, "rows/cols", "invalid mask dimensions");
  }
  const Json& keep = as_array(doc["keep"], "keep");
  if (keep.size() != rows) {
    throw Error(ErrorKind::Invariant, "keep",
                "expected " + std::to_string(rows) + " rows, got " +
                    std::to_string(keep.size()));
  }
  Mask mask(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = as_array(keep[i], idx("keep", i));
    if (row.size() != cols) {
      throw Error(ErrorKind::Invariant, idx("keep", i),
                  "expected " + std::to_string(cols) + " flags, got " +
                      std::to_string(row.size()));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      mask.set(i, j, as_bool(row[j], idx("keep", i, j)));
    }
  }
  return mask;
}

template <typename Seq>
void append_line(std::string& out, const Seq& values) {
  bool first = true;
  for (auto v : values) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  out += '\n';
}

}  // namespace

Format detect_format(std::string_view text) noexcept {
  bool line_start = true;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\n') {
      line_start = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (line_start && ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    return ch == '{' ? Format::Json : Format::Text;
  }
  return Format::Text;
}

Instance parse_instance(std::string_view text, Format format) {
  return format == Format::Json ? parse_instance_json(text)
                                : parse_instance_text(text);
}

std::string serialize_instance(const Instance& inst, Format format) {
  if (format == Format::Json) {
    OrderedJson doc;
    doc["rows"] = inst.rows();
    doc["cols"] = inst.cols();
    OrderedJson grid = OrderedJson::array();
    for (std::size_t i = 0; i < inst.rows(); ++i) {
      auto row = inst.row(i);
      grid.push_back(OrderedJson(std::vector<Value>(row.begin(), row.end())));
    }
    doc["grid"] = std::move(grid);
    doc["row_hints"] = std::vector<Value>(inst.row_hints().begin(),
                                          inst.row_hints().end());
    doc["col_hints"] = std::vector<Value>(inst.col_hints().begin(),
                                          inst.col_hints().end());
    return doc.dump() + "\n";
  }
  std::string out = std::to_string(inst.rows()) + " " +
                    std::to_string(inst.cols()) + "\n";
  for (std::size_t i = 0; i < inst.rows(); ++i) append_line(out, inst.row(i));
  append_line(out, inst.row_hints());
  append_line(out, inst.col_hints());
  return out;
}

Mask parse_mask(std::string_view text, Format format) {
  return format == Format::Json ? parse_mask_json(text) : parse_mask_text(text);
}

std::string serialize_mask(const Mask& mask, Format format) {
  if (format == Format::Json) {
    OrderedJson doc;
    doc["rows"] = mask.rows();
    doc["cols"] = mask.cols();
    OrderedJson keep = OrderedJson::array();
    for (std::size_t i = 0; i < mask.rows(); ++i) {
      OrderedJson row = OrderedJson::array();
      for (std::size_t j = 0; j < mask.cols(); ++j) row.push_back(mask.kept(i, j));
      keep.push_back(std::move(row));
    }
    doc["keep"] = std::move(keep);
    return doc.dump() + "\n";
  }
  std::string out = std::to_string(mask.rows()) + " " +
                    std::to_string(mask.cols()) + "\n";
  for (std::size_t i = 0; i < mask.rows(); ++i) {
    for (std::size_t j = 0; j < mask.cols(); ++j) {
      if (j) out += ' ';
      out += mask.kept(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace sumplete
