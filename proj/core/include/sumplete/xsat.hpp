#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace sumplete {

/// Three distinct positive literals, stored as 0-based variable indices in
/// ascending order. Files and messages use 1-based x_1..x_n.
using Clause = std::array<std::uint32_t, 3>;

/// Exact-satisfiability formula over positive 3-literal clauses. The model
/// allows any clause count; is_regular() tells whether it is 3-CNF+3.
class XsatInstance {
 public:
  /// Sorts each clause; throws Invariant on out-of-range or repeated
  /// variables, or on n_vars == 0.
  XsatInstance(std::size_t n_vars, std::vector<Clause> clauses);

  std::size_t n_vars() const noexcept { return n_vars_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  friend bool operator==(const XsatInstance&, const XsatInstance&) = default;

 private:
  std::size_t n_vars_;
  std::vector<Clause> clauses_;
};

struct Assignment {
  std::vector<bool> values;  ///< values[j] is x_{j+1}

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// m == n and every variable occurs in exactly three clauses.
bool is_regular(const XsatInstance& phi);

/// Occurrence count of each variable across all clauses.
std::vector<std::size_t> occurrences(const XsatInstance& phi);

/// Every clause has exactly one true variable. Throws DimensionMismatch if
/// the assignment length differs from n_vars.
bool verify_assignment(const XsatInstance& phi, const Assignment& a);

inline constexpr std::size_t kXsatOracleMaxVars = 24;

struct XsatOracleResult {
  bool satisfiable = false;
  std::optional<Assignment> witness;  ///< first satisfying assignment
  std::uint64_t count = 0;
};

/// Tries all 2^n assignments in increasing binary order with x_1 as the
/// least significant bit. Requires n <= 24 (Capacity otherwise).
XsatOracleResult brute_force_xsat(
    const XsatInstance& phi,
    const std::function<void(const Assignment&)>& on_solution = {});

}  // namespace sumplete
