#include "sumplete/instance.hpp"

#include <algorithm>
#include <string>

#include "sumplete/error.hpp"

namespace sumplete {

namespace {

std::string cell_name(std::size_t row, std::size_t col) {
  return "cell (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
         ")";
}

void check_shape(const Instance& inst, const Mask& mask) {
  if (inst.rows() != mask.rows() || inst.cols() != mask.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "mask",
                "mask is " + std::to_string(mask.rows()) + "x" +
                    std::to_string(mask.cols()) + " but instance is " +
                    std::to_string(inst.rows()) + "x" +
                    std::to_string(inst.cols()));
  }
}

}  // namespace

Instance::Instance(std::size_t rows, std::size_t cols, std::vector<Value> grid,
                   std::vector<Value> row_hints, std::vector<Value> col_hints)
    : rows_(rows),
      cols_(cols),
      grid_(std::move(grid)),
      row_hints_(std::move(row_hints)),
      col_hints_(std::move(col_hints)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::Invariant, "dimensions",
                "rows and cols must be at least 1");
  }
  if (rows_ > kMaxCells / cols_) {
    throw Error(ErrorKind::Invariant, "dimensions",
                "grid has more than " + std::to_string(kMaxCells) + " cells");
  }
  if (grid_.size() != rows_ * cols_) {
    throw Error(ErrorKind::Invariant, "grid",
                "expected " + std::to_string(rows_ * cols_) +
                    " cell values, got " + std::to_string(grid_.size()));
  }
  if (row_hints_.size() != rows_) {
    throw Error(ErrorKind::Invariant, "row_hints",
                "expected " + std::to_string(rows_) + " row hints, got " +
                    std::to_string(row_hints_.size()));
  }
  if (col_hints_.size() != cols_) {
    throw Error(ErrorKind::Invariant, "col_hints",
                "expected " + std::to_string(cols_) + " column hints, got " +
                    std::to_string(col_hints_.size()));
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Value v = at(i, j);
      if (v < 1 || v > kMaxCellValue) {
        throw Error(ErrorKind::Invariant, cell_name(i, j),
                    "value " + std::to_string(v) + " outside [1, " +
                        std::to_string(kMaxCellValue) + "]");
      }
    }
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    if (row_hints_[i] < 0) {
      throw Error(ErrorKind::Invariant, "row hint " + std::to_string(i + 1),
                  "hint must be non-negative");
    }
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    if (col_hints_[j] < 0) {
      throw Error(ErrorKind::Invariant, "column hint " + std::to_string(j + 1),
                  "hint must be non-negative");
    }
  }
}

Mask::Mask(std::size_t rows, std::size_t cols, bool keep)
    : rows_(rows), cols_(cols), keep_(rows * cols, keep ? 1 : 0) {}

std::size_t Mask::count_kept() const noexcept {
  return static_cast<std::size_t>(std::count(keep_.begin(), keep_.end(), 1));
}

std::vector<Value> row_sums(const Instance& inst, const Mask& mask) {
  check_shape(inst, mask);
  std::vector<Value> sums(inst.rows(), 0);
  for (std::size_t i = 0; i < inst.rows(); ++i) {
    for (std::size_t j = 0; j < inst.cols(); ++j) {
      if (mask.kept(i, j)) sums[i] += inst.at(i, j);
    }
  }
  return sums;
}

std::vector<Value> col_sums(const Instance& inst, const Mask& mask) {
  check_shape(inst, mask);
  std::vector<Value> sums(inst.cols(), 0);
  for (std::size_t i = 0; i < inst.rows(); ++i) {
    for (std::size_t j = 0; j < inst.cols(); ++j) {
      if (mask.kept(i, j)) sums[j] += inst.at(i, j);
    }
  }
  return sums;
}

bool verify(const Instance& inst, const Mask& mask, std::size_t& cell_visits) {
  check_shape(inst, mask);
  // Single pass: row sums are completed per row, column sums accumulate.
  std::vector<Value> cols(inst.cols(), 0);
  bool ok = true;
  for (std::size_t i = 0; i < inst.rows(); ++i) {
    Value row = 0;
    for (std::size_t j = 0; j < inst.cols(); ++j) {
      ++cell_visits;
      if (mask.kept(i, j)) {
        row += inst.at(i, j);
        cols[j] += inst.at(i, j);
      }
    }
    ok = ok && row == inst.row_hint(i);
  }
  for (std::size_t j = 0; j < inst.cols(); ++j) {
    ok = ok && cols[j] == inst.col_hint(j);
  }
  return ok;
}

bool verify(const Instance& inst, const Mask& mask) {
  std::size_t visits = 0;
  return verify(inst, mask, visits);
}

bool is_two_valued(const Instance& inst, Value lo, Value hi) {
  if (lo < 1 || hi <= lo) {
    throw Error(ErrorKind::Precondition, "",
                "is_two_valued requires 0 < lo < hi");
  }
  return std::all_of(inst.grid().begin(), inst.grid().end(),
                     [&](Value v) { return v == lo || v == hi; });
}

}  // namespace sumplete
