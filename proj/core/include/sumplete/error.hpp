#pragma once

#include <stdexcept>
#include <string>

namespace sumplete {

/// Category of a library failure. Callers (the CLI in particular) branch on
/// this rather than on message text.
enum class ErrorKind {
  Syntax,             ///< malformed input text
  Invariant,          ///< well-formed input describing an invalid value
  DimensionMismatch,  ///< mask/assignment shape does not match its target
  Precondition,       ///< argument outside an operation's domain
  NotRegular,         ///< formula is not 3-CNF+3 shaped
  Capacity,           ///< instance too large for an exhaustive oracle
  RetryBudget,        ///< randomized construction gave up
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  /// `locator` names where the problem is ("line 3", "grid[2][4]", ...);
  /// it may be empty when there is no meaningful position.
  Error(ErrorKind kind, std::string locator, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& locator() const noexcept { return locator_; }

 private:
  ErrorKind kind_;
  std::string locator_;
};

}  // namespace sumplete
