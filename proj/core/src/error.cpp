#include "sumplete/error.hpp"

#include <utility>

namespace sumplete {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Invariant: return "invariant violation";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::Precondition: return "precondition violation";
    case ErrorKind::NotRegular: return "formula is not regular";
    case ErrorKind::Capacity: return "capacity exceeded";
    case ErrorKind::RetryBudget: return "retry budget exhausted";
  }
  return "error";
}

namespace {

std::string compose(ErrorKind kind, const std::string& locator,
                    const std::string& message) {
  std::string out = to_string(kind);
  if (!locator.empty()) out += " at " + locator;
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string locator, const std::string& message)
    : std::runtime_error(compose(kind, locator, message)),
      kind_(kind),
      locator_(std::move(locator)) {}

}  // namespace sumplete
