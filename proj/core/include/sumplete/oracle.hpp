#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "sumplete/instance.hpp"

namespace sumplete {

// Exhaustive reference procedures for testing the solver. They are written
// independently of solver.cpp and share none of its search code.

inline constexpr std::size_t kFlatOracleMaxCells = 24;
inline constexpr std::size_t kRowOracleMaxCols = 24;
inline constexpr std::uint64_t kRowOracleMaxProduct = 100'000'000;

struct OracleResult {
  std::uint64_t count = 0;
  std::optional<Mask> first_witness;  ///< first solution in canonical order
};

using SolutionVisitor = std::function<void(const Mask&)>;

/// Tries all 2^(r*c) masks. Requires r*c <= 24.
OracleResult brute_force_flat(const Instance& inst,
                              const SolutionVisitor& visit = {});

/// Cartesian product of each row's hint-matching subsets (found by trying
/// all 2^c subsets of that row), with columns checked on complete grids.
/// Requires c <= 24 and a candidate-count product <= 10^8.
OracleResult brute_force_rows(const Instance& inst,
                              const SolutionVisitor& visit = {});

/// Flat variant when it fits, row-product variant otherwise. Throws
/// ErrorKind::Capacity when neither applies.
OracleResult brute_force(const Instance& inst, const SolutionVisitor& visit = {});

}  // namespace sumplete
