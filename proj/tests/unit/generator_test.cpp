#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "sumplete/error.hpp"
#include "sumplete/generator.hpp"
#include "sumplete/instance_io.hpp"
#include "sumplete/oracle.hpp"
#include "sumplete/rng.hpp"
#include "sumplete/xsat_io.hpp"

using namespace sumplete;

TEST(Rng, ReferenceOutputs) {
  // Computed by an independent transcription of the documented equations.
  Rng rng(0);
  EXPECT_EQ(rng.next(), 0x99ec5f36cb75f2b4ULL);
  EXPECT_EQ(rng.next(), 0xbf6e1f784956452aULL);
  EXPECT_EQ(rng.next(), 0x1a5f849d4933e6e0ULL);
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(1);
  std::vector<int> hits(7, 0);
  for (int k = 0; k < 7000; ++k) ++hits[rng.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(GenPuzzle, SeedFortyTwoGolden) {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.rows = 3;
  cfg.cols = 3;
  cfg.alphabet = GenConfig::ones_and_threes();
  const auto a = gen_puzzle(cfg);
  const auto b = gen_puzzle(cfg);
  EXPECT_EQ(a.instance, b.instance);
  EXPECT_EQ(a.witness, b.witness);
  // Frozen from an independent transcription of the generator equations.
  const Instance expected(3, 3, {1, 1, 3, 3, 1, 1, 1, 3, 1}, {0, 4, 2}, {4, 1, 1});
  EXPECT_EQ(a.instance, expected);
  EXPECT_TRUE(verify(a.instance, a.witness));
}

TEST(GenPuzzle, WitnessAlwaysVerifies) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.rows = 1 + rng.below(8);
    cfg.cols = 1 + rng.below(8);
    cfg.keep_prob = {rng.below(5), 4};
    if (seed % 3 == 0) cfg.alphabet = GenConfig::ones_and_threes();
    const auto puzzle = gen_puzzle(cfg);
    EXPECT_TRUE(verify(puzzle.instance, puzzle.witness));
    for (Value v : puzzle.instance.grid()) {
      EXPECT_NE(std::find(cfg.alphabet.begin(), cfg.alphabet.end(), v),
                cfg.alphabet.end());
    }
  }
}

TEST(GenPuzzle, ZeroKeepProbabilityGivesZeroHints) {
  GenConfig cfg;
  cfg.keep_prob = {0, 1};
  const auto puzzle = gen_puzzle(cfg);
  for (Value h : puzzle.instance.row_hints()) EXPECT_EQ(h, 0);
  for (Value h : puzzle.instance.col_hints()) EXPECT_EQ(h, 0);
}

TEST(GenPuzzle, RejectsBadConfig) {
  GenConfig cfg;
  cfg.alphabet = {};
  EXPECT_THROW(gen_puzzle(cfg), Error);
  cfg = {};
  cfg.alphabet = {0, 1};
  EXPECT_THROW(gen_puzzle(cfg), Error);
  cfg = {};
  cfg.keep_prob = {3, 2};
  EXPECT_THROW(gen_puzzle(cfg), Error);
  cfg = {};
  cfg.rows = 0;
  EXPECT_THROW(gen_puzzle(cfg), Error);
}

TEST(GenXsatRegular, AlwaysRegular) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto phi = gen_xsat_regular(3 + seed % 20, seed);
    EXPECT_TRUE(is_regular(phi));
  }
}

TEST(GenXsatRegular, NThreeIsTripledClause) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto phi = gen_xsat_regular(3, seed);
    for (const auto& c : phi.clauses()) EXPECT_EQ(c, (Clause{0, 1, 2}));
  }
}

TEST(GenXsatRegular, OccurrenceHistogramAndCoOccurrence) {
  // Exact: every variable three times. Loose: pairs co-occur at similar rates.
  std::vector<std::vector<int>> pairs(9, std::vector<int>(9, 0));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto phi = gen_xsat_regular(9, seed);
    for (auto count : occurrences(phi)) EXPECT_EQ(count, 3U);
    for (const auto& c : phi.clauses()) {
      ++pairs[c[0]][c[1]];
      ++pairs[c[0]][c[2]];
      ++pairs[c[1]][c[2]];
    }
  }
  // 100 formulas x 9 clauses x 3 pairs spread over 36 pairs: mean 75.
  for (std::size_t a = 0; a < 9; ++a) {
    for (std::size_t b = a + 1; b < 9; ++b) {
      EXPECT_GT(pairs[a][b], 30);
      EXPECT_LT(pairs[a][b], 140);
    }
  }
}

TEST(GenXsatRegular, Preconditions) {
  EXPECT_THROW(gen_xsat_regular(2, 0), Error);
}

TEST(GenXsatPlanted, PlantedAssignmentSatisfies) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 * (1 + seed % 8);
    const auto planted = gen_xsat_planted(n, seed);
    EXPECT_TRUE(is_regular(planted.instance));
    EXPECT_TRUE(verify_assignment(planted.instance, planted.assignment));
    EXPECT_EQ(std::count(planted.assignment.values.begin(),
                         planted.assignment.values.end(), true),
              static_cast<long>(n / 3));
  }
}

TEST(GenXsatPlanted, OracleConfirmsSatisfiable) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto planted = gen_xsat_planted(seed % 2 ? 9 : 6, seed);
    EXPECT_TRUE(brute_force_xsat(planted.instance).satisfiable);
  }
}

TEST(GenXsatPlanted, Preconditions) {
  EXPECT_THROW(gen_xsat_planted(4, 0), Error);
  EXPECT_THROW(gen_xsat_planted(0, 0), Error);
}

TEST(Generators, ReproducibleSerializedOutput) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(serialize_xsat(gen_xsat_regular(12, seed), Format::Text),
              serialize_xsat(gen_xsat_regular(12, seed), Format::Text));
    EXPECT_EQ(serialize_xsat(gen_xsat_planted(12, seed).instance, Format::Json),
              serialize_xsat(gen_xsat_planted(12, seed).instance, Format::Json));
    GenConfig cfg;
    cfg.seed = seed;
    EXPECT_EQ(serialize_instance(gen_puzzle(cfg).instance, Format::Json),
              serialize_instance(gen_puzzle(cfg).instance, Format::Json));
  }
  EXPECT_NE(serialize_xsat(gen_xsat_regular(12, 1), Format::Text),
            serialize_xsat(gen_xsat_regular(12, 2), Format::Text));
}

TEST(PerturbHint, ChangesExactlyOneHintByOne) {
  Rng rng(4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.rows = 1 + rng.below(5);
    cfg.cols = 1 + rng.below(5);
    const auto base = gen_puzzle(cfg).instance;
    const auto moved = perturb_hint(base, seed);
    EXPECT_EQ(moved, perturb_hint(base, seed));
    int diffs = 0;
    for (std::size_t i = 0; i < base.rows(); ++i) {
      const Value d = moved.row_hint(i) - base.row_hint(i);
      EXPECT_TRUE(d == 0 || d == 1);
      diffs += d != 0;
    }
    for (std::size_t j = 0; j < base.cols(); ++j) {
      const Value d = moved.col_hint(j) - base.col_hint(j);
      EXPECT_TRUE(d == 0 || d == 1);
      diffs += d != 0;
    }
    EXPECT_EQ(diffs, 1);
    EXPECT_TRUE(std::equal(base.grid().begin(), base.grid().end(),
                           moved.grid().begin()));
  }
}

TEST(PerturbHint, SingleCellBecomesUnsolvable) {
  const Instance inst(1, 1, {3}, {3}, {3});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(brute_force(perturb_hint(inst, seed)).count, 0U);
  }
}
