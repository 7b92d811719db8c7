#pragma once

#include <cstdint>
#include <vector>

#include "sumplete/instance.hpp"
#include "sumplete/xsat.hpp"

namespace sumplete {

struct Probability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t rows = 5;
  std::size_t cols = 5;
  std::vector<Value> alphabet = digits();
  Probability keep_prob;

  static std::vector<Value> digits() { return {1, 2, 3, 4, 5, 6, 7, 8, 9}; }
  static std::vector<Value> ones_and_threes() { return {1, 3}; }
};

struct GeneratedPuzzle {
  Instance instance;
  Mask witness;
};

/// Random puzzle with a planted solution. Cells are drawn row-major,
/// uniformly from the alphabet; then keep flags are drawn row-major with
/// P(keep) = keep_prob; hints are the witness's line sums.
GeneratedPuzzle gen_puzzle(const GenConfig& cfg);

inline constexpr int kRegularRetries = 1000;

/// Regular 3-CNF+3 formula on n >= 3 variables: clause i is
/// {p1(i), p2(i), p3(i)} for three uniform permutations, all three redrawn
/// whenever some clause repeats a variable. Not uniform over all regular
/// formulas.
XsatInstance gen_xsat_regular(std::size_t n, std::uint64_t seed);

struct PlantedXsat {
  XsatInstance instance;
  Assignment assignment;
};

/// Regular formula with a hidden satisfying assignment; n must be a positive
/// multiple of 3. A random n/3 variables are true. Their 3n/3 = n
/// occurrences are dealt one per clause in shuffled order; the 2n
/// occurrences of false variables are shuffled into the remaining two slots
/// of each clause, and clauses that got the same false variable twice are
/// repaired by random swaps.
PlantedXsat gen_xsat_planted(std::size_t n, std::uint64_t seed);

/// Copy of `inst` with one uniformly chosen hint (rows first, then columns)
/// raised by 1.
Instance perturb_hint(const Instance& inst, std::uint64_t seed);

}  // namespace sumplete
