#include "sumplete/generator.hpp"

#include <numeric>
#include <string>

#include "sumplete/error.hpp"
#include "sumplete/rng.hpp"

namespace sumplete {

namespace {

void check_config(const GenConfig& cfg) {
  if (cfg.rows == 0 || cfg.cols == 0 || cfg.rows > kMaxCells / cfg.cols) {
    throw Error(ErrorKind::Precondition, "rows/cols",
                "need 1 <= rows*cols <= " + std::to_string(kMaxCells));
  }
  if (cfg.alphabet.empty()) {
    throw Error(ErrorKind::Precondition, "alphabet", "alphabet is empty");
  }
  for (Value v : cfg.alphabet) {
    if (v < 1 || v > kMaxCellValue) {
      throw Error(ErrorKind::Precondition, "alphabet",
                  "value " + std::to_string(v) + " outside [1, " +
                      std::to_string(kMaxCellValue) + "]");
    }
  }
  if (cfg.keep_prob.den == 0 || cfg.keep_prob.num > cfg.keep_prob.den) {
    throw Error(ErrorKind::Precondition, "keep_prob",
                "probability must be num/den with 0 <= num <= den, den > 0");
  }
}

std::vector<std::uint32_t> permutation(Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  rng.shuffle(std::span<std::uint32_t>(p));
  return p;
}

}  // namespace

GeneratedPuzzle gen_puzzle(const GenConfig& cfg) {
  check_config(cfg);
  Rng rng(cfg.seed);
  const std::size_t cells = cfg.rows * cfg.cols;
  std::vector<Value> grid(cells);
  for (auto& v : grid) v = cfg.alphabet[rng.below(cfg.alphabet.size())];

  Mask witness(cfg.rows, cfg.cols);
  std::vector<Value> row_hints(cfg.rows, 0);
  std::vector<Value> col_hints(cfg.cols, 0);
  for (std::size_t t = 0; t < cells; ++t) {
    const bool keep = rng.below(cfg.keep_prob.den) < cfg.keep_prob.num;
    const std::size_t i = t / cfg.cols;
    const std::size_t j = t % cfg.cols;
    witness.set(i, j, keep);
    if (keep) {
      row_hints[i] += grid[t];
      col_hints[j] += grid[t];
    }
  }
  return {Instance(cfg.rows, cfg.cols, std::move(grid), std::move(row_hints),
                   std::move(col_hints)),
          std::move(witness)};
}

XsatInstance gen_xsat_regular(std::size_t n, std::uint64_t seed) {
  if (n < 3) {
    throw Error(ErrorKind::Precondition, "n", "need at least 3 variables");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < kRegularRetries; ++attempt) {
    const auto p1 = permutation(rng, n);
    const auto p2 = permutation(rng, n);
    const auto p3 = permutation(rng, n);
    bool distinct = true;
    for (std::size_t i = 0; distinct && i < n; ++i) {
      distinct = p1[i] != p2[i] && p1[i] != p3[i] && p2[i] != p3[i];
    }
    if (!distinct) continue;
    std::vector<Clause> clauses(n);
    for (std::size_t i = 0; i < n; ++i) clauses[i] = {p1[i], p2[i], p3[i]};
    return XsatInstance(n, std::move(clauses));
  }
  throw Error(ErrorKind::RetryBudget, "",
              "no repeat-free permutation triple after " +
                  std::to_string(kRegularRetries) + " draws");
}

PlantedXsat gen_xsat_planted(std::size_t n, std::uint64_t seed) {
  if (n < 3 || n % 3 != 0) {
    throw Error(ErrorKind::Precondition, "n",
                "planted generation needs a positive multiple of 3");
  }
  Rng rng(seed);
  const auto order = permutation(rng, n);
  const std::size_t n_true = n / 3;

  std::vector<std::uint32_t> true_slots;
  std::vector<std::uint32_t> false_slots;
  for (std::size_t k = 0; k < n; ++k) {
    auto& slots = k < n_true ? true_slots : false_slots;
    slots.insert(slots.end(), 3, order[k]);
  }
  rng.shuffle(std::span<std::uint32_t>(true_slots));
  rng.shuffle(std::span<std::uint32_t>(false_slots));

  // false_slots[2i], false_slots[2i+1] fill clause i.
  auto clash = [&](std::size_t clause) {
    return false_slots[2 * clause] == false_slots[2 * clause + 1];
  };
  const std::size_t budget = 1000 * n;
  std::size_t spent = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (clash(i)) {
      if (++spent > budget) {
        throw Error(ErrorKind::RetryBudget, "",
                    "could not repair duplicate variables in planted clauses");
      }
      const auto p = static_cast<std::size_t>(rng.below(2 * n));
      if (p / 2 == i) continue;
      std::swap(false_slots[2 * i + 1], false_slots[p]);
      if (clash(p / 2)) std::swap(false_slots[2 * i + 1], false_slots[p]);
    }
  }

  std::vector<Clause> clauses(n);
  for (std::size_t i = 0; i < n; ++i) {
    clauses[i] = {true_slots[i], false_slots[2 * i], false_slots[2 * i + 1]};
  }
  Assignment a;
  a.values.assign(n, false);
  for (std::size_t k = 0; k < n_true; ++k) a.values[order[k]] = true;
  return {XsatInstance(n, std::move(clauses)), std::move(a)};
}

Instance perturb_hint(const Instance& inst, std::uint64_t seed) {
  Rng rng(seed);
  const auto k = static_cast<std::size_t>(rng.below(inst.rows() + inst.cols()));
  std::vector<Value> rows(inst.row_hints().begin(), inst.row_hints().end());
  std::vector<Value> cols(inst.col_hints().begin(), inst.col_hints().end());
  if (k < inst.rows()) {
    rows[k] += 1;
  } else {
    cols[k - inst.rows()] += 1;
  }
  return Instance(inst.rows(), inst.cols(),
                  std::vector<Value>(inst.grid().begin(), inst.grid().end()),
                  std::move(rows), std::move(cols));
}

}  // namespace sumplete
