#include <benchmark/benchmark.h>

#include "sumplete/generator.hpp"
#include "sumplete/oracle.hpp"
#include "sumplete/reduction.hpp"
#include "sumplete/solver.hpp"

using namespace sumplete;

namespace {

// Planted formulas are satisfiable, so solve stops at the first witness.
void BM_SolveReducedPlanted(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = reduce(gen_xsat_planted(n, 1).instance);
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst));
}
BENCHMARK(BM_SolveReducedPlanted)->DenseRange(6, 21, 3);

// n not divisible by 3: unsatisfiable, so the whole tree is searched.
void BM_SolveReducedUnsat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = reduce(gen_xsat_regular(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst));
}
BENCHMARK(BM_SolveReducedUnsat)->Arg(7)->Arg(10)->Arg(13)->Arg(16);

void BM_SolvePruning(benchmark::State& state) {
  const auto inst = reduce(gen_xsat_regular(10, 3));
  SolverConfig cfg;
  cfg.pruning = static_cast<Pruning>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, cfg));
}
BENCHMARK(BM_SolvePruning)->Arg(0)->Arg(1)->Arg(2);

void BM_CountRandomPuzzle(benchmark::State& state) {
  GenConfig cfg;
  cfg.seed = 9;
  cfg.rows = cfg.cols = static_cast<std::size_t>(state.range(0));
  const auto inst = gen_puzzle(cfg).instance;
  for (auto _ : state) benchmark::DoNotOptimize(count_solutions(inst));
}
BENCHMARK(BM_CountRandomPuzzle)->DenseRange(4, 8, 2);

void BM_BruteForceXsat(benchmark::State& state) {
  const auto phi = gen_xsat_regular(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_xsat(phi));
}
BENCHMARK(BM_BruteForceXsat)->Arg(12)->Arg(18);

void BM_OracleRows(benchmark::State& state) {
  const auto inst = reduce(gen_xsat_planted(6, 2).instance);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_rows(inst));
}
BENCHMARK(BM_OracleRows);

}  // namespace

BENCHMARK_MAIN();
