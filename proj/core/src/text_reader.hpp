#pragma once

// Line-oriented tokenizer shared by the grid-text and xsat-text parsers.
// Blank lines and lines whose first non-space character is '#' are skipped.

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumplete/error.hpp"

namespace sumplete::detail {

struct TextLine {
  std::size_t number = 0;  // 1-based
  std::vector<std::string_view> tokens;

  std::string where() const { return "line " + std::to_string(number); }
};

class TextReader {
 public:
  explicit TextReader(std::string_view text) : text_(text) {}

  /// Next significant line, or nullopt at end of input.
  std::optional<TextLine> next() {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      TextLine line{line_, split(raw)};
      if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  /// Like next(), but reaching the end is a syntax error naming `what`.
  TextLine expect(const char* what) {
    auto line = next();
    if (!line) {
      throw Error(ErrorKind::Syntax, "line " + std::to_string(line_ + 1),
                  std::string("unexpected end of input, expected ") + what);
    }
    return *line;
  }

  void expect_end() {
    if (auto line = next()) {
      throw Error(ErrorKind::Syntax, line->where(), "trailing content");
    }
  }

 private:
  static std::vector<std::string_view> split(std::string_view raw) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      std::size_t start = i;
      while (i < raw.size() && !is_space(raw[i])) ++i;
      if (i > start) out.push_back(raw.substr(start, i - start));
    }
    return out;
  }
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

/// Parses a base-10 integer token. Non-numeric text is a syntax error;
/// a number that overflows int64 is an invariant violation.
inline std::int64_t parse_int(std::string_view token, const std::string& where) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorKind::Invariant, where,
                "integer out of range: " + std::string(token));
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::Syntax, where,
                "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

inline void expect_tokens(const TextLine& line, std::size_t count,
                          const char* what) {
  if (line.tokens.size() != count) {
    throw Error(ErrorKind::Syntax, line.where(),
                "expected " + std::to_string(count) + " " + what + ", got " +
                    std::to_string(line.tokens.size()));
  }
}

}  // namespace sumplete::detail
