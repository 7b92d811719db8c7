#include "sumplete/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sumplete/error.hpp"

namespace sumplete {

namespace {

// Bit (width - 1 - t) of `bits` is cell t, so ascending integers walk masks
// in lexicographic order with cell 0 most significant.
bool cell_bit(std::uint64_t bits, std::size_t width, std::size_t t) {
  return (bits >> (width - 1 - t)) & 1U;
}

}  // namespace

OracleResult brute_force_flat(const Instance& inst, const SolutionVisitor& visit) {
  const std::size_t r = inst.rows();
  const std::size_t c = inst.cols();
  const std::size_t cells = r * c;
  if (cells > kFlatOracleMaxCells) {
    throw Error(ErrorKind::Capacity, "",
                "flat oracle handles at most " +
                    std::to_string(kFlatOracleMaxCells) + " cells");
  }
  OracleResult result;
  std::vector<Value> rows(r);
  std::vector<Value> cols(c);
  const std::uint64_t total = std::uint64_t{1} << cells;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::fill(rows.begin(), rows.end(), 0);
    std::fill(cols.begin(), cols.end(), 0);
    for (std::size_t t = 0; t < cells; ++t) {
      if (cell_bit(bits, cells, t)) {
        rows[t / c] += inst.grid()[t];
        cols[t % c] += inst.grid()[t];
      }
    }
    bool ok = true;
    for (std::size_t i = 0; ok && i < r; ++i) ok = rows[i] == inst.row_hint(i);
    for (std::size_t j = 0; ok && j < c; ++j) ok = cols[j] == inst.col_hint(j);
    if (!ok) continue;

    ++result.count;
    if (result.first_witness && !visit) continue;
    Mask mask(r, c);
    for (std::size_t t = 0; t < cells; ++t) {
      mask.set(t / c, t % c, cell_bit(bits, cells, t));
    }
    if (visit) visit(mask);
    if (!result.first_witness) result.first_witness = std::move(mask);
  }
  return result;
}

OracleResult brute_force_rows(const Instance& inst, const SolutionVisitor& visit) {
  const std::size_t r = inst.rows();
  const std::size_t c = inst.cols();
  if (c > kRowOracleMaxCols) {
    throw Error(ErrorKind::Capacity, "",
                "row oracle handles at most " +
                    std::to_string(kRowOracleMaxCols) + " columns");
  }

  // Per row: the matching subsets as bit patterns, ascending.
  std::vector<std::vector<std::uint64_t>> options(r);
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << c); ++bits) {
      Value sum = 0;
      for (std::size_t j = 0; j < c; ++j) {
        if (cell_bit(bits, c, j)) sum += inst.at(i, j);
      }
      if (sum == inst.row_hint(i)) options[i].push_back(bits);
    }
    if (options[i].empty()) return {};
    product *= options[i].size();
    if (product > kRowOracleMaxProduct) {
      throw Error(ErrorKind::Capacity, "",
                  "row-candidate product exceeds " +
                      std::to_string(kRowOracleMaxProduct));
    }
  }

  OracleResult result;
  std::vector<std::size_t> pick(r, 0);
  std::vector<Value> cols(c);
  for (;;) {
    std::fill(cols.begin(), cols.end(), 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (cell_bit(options[i][pick[i]], c, j)) cols[j] += inst.at(i, j);
      }
    }
    bool ok = true;
    for (std::size_t j = 0; ok && j < c; ++j) ok = cols[j] == inst.col_hint(j);
    if (ok) {
      ++result.count;
      if (!result.first_witness || visit) {
        Mask mask(r, c);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < c; ++j) {
            mask.set(i, j, cell_bit(options[i][pick[i]], c, j));
          }
        }
        if (visit) visit(mask);
        if (!result.first_witness) result.first_witness = std::move(mask);
      }
    }
    // Odometer with the last row moving fastest.
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
      if (i == 0) return result;
    }
  }
}

OracleResult brute_force(const Instance& inst, const SolutionVisitor& visit) {
  if (inst.rows() * inst.cols() <= kFlatOracleMaxCells) {
    return brute_force_flat(inst, visit);
  }
  return brute_force_rows(inst, visit);
}

}  // namespace sumplete
