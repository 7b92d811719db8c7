#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sumplete/instance.hpp"

namespace sumplete {

/// Column pruning applied after each row is fixed. Every level is sound:
/// it discards only partial assignments with no completion, so status,
/// counts and the first witness never depend on it, only the stats do.
enum class Pruning {
  None,          ///< columns are checked only at complete assignments
  Interval,      ///< kept-so-far <= C(j) <= kept-so-far + total of rows below
  Reachability,  ///< Interval, plus C(j) - kept-so-far must be a subset sum
                 ///< of the column's cells in the rows below
};

struct SolverConfig {
  std::optional<std::uint64_t> node_limit;
  std::optional<std::uint64_t> solution_cap;  ///< counting only; default 10^6
  /// When true the outcome is bitwise reproducible: elapsed is left at zero.
  /// The search order itself is always canonical.
  bool deterministic = true;
  Pruning pruning = Pruning::Reachability;
  /// Upper bound on the total number of precomputed row candidates; going
  /// over it ends the search with ResourceLimit.
  std::uint64_t candidate_limit = 4'000'000;
};

inline constexpr std::uint64_t kDefaultSolutionCap = 1'000'000;

enum class SolveStatus { Solved, Unsolvable, ResourceLimit };

const char* to_string(SolveStatus status) noexcept;

struct SolveStats {
  std::uint64_t nodes_expanded = 0;          ///< search nodes entered
  std::uint64_t row_subsets_enumerated = 0;  ///< row candidates tried
  std::chrono::nanoseconds elapsed{0};

  friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unsolvable;
  std::optional<Mask> witness;  ///< present iff status == Solved
  SolveStats stats;
};

struct CountOutcome {
  std::uint64_t count = 0;
  bool exhausted = false;  ///< true iff the whole search space was covered
  SolveStats stats;
};

using RowChoice = std::vector<bool>;

/// All keep/cross patterns of one row whose kept values sum to `target`,
/// in lexicographic order (cell 0 most significant, crossed before kept).
std::vector<RowChoice> row_candidates(std::span<const Value> values,
                                      Value target);

/// Depth-first search over rows in index order, trying each row's
/// candidates in canonical order. A Solved witness is the lexicographically
/// first solution under that order.
SolveOutcome solve(const Instance& inst, const SolverConfig& cfg = {});

/// Number of distinct solutions, stopping at the solution cap.
CountOutcome count_solutions(const Instance& inst, const SolverConfig& cfg = {});

/// count_solutions() that also hands each solution, in canonical order, to
/// `on_solution`.
CountOutcome for_each_solution(const Instance& inst, const SolverConfig& cfg,
                               const std::function<void(const Mask&)>& on_solution);

}  // namespace sumplete
