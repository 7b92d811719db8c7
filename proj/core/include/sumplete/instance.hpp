#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sumplete {

using Value = std::int64_t;

inline constexpr std::size_t kMaxCells = 10'000;
inline constexpr Value kMaxCellValue = 1'000'000;

/// A Sumplete puzzle: an r x c grid of positive integers with one target sum
/// per row and per column. Rows and columns are 0-based in the API; error
/// messages report them 1-based.
///
/// Construction validates every invariant, so a live Instance is always
/// well formed. Hints larger than the line total are legal (the puzzle is
/// just unsolvable).
class Instance {
 public:
  Instance(std::size_t rows, std::size_t cols, std::vector<Value> grid,
           std::vector<Value> row_hints, std::vector<Value> col_hints);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Value at(std::size_t row, std::size_t col) const noexcept {
    return grid_[row * cols_ + col];
  }
  std::span<const Value> row(std::size_t row) const noexcept {
    return {grid_.data() + row * cols_, cols_};
  }
  std::span<const Value> grid() const noexcept { return grid_; }

  Value row_hint(std::size_t row) const noexcept { return row_hints_[row]; }
  Value col_hint(std::size_t col) const noexcept { return col_hints_[col]; }
  std::span<const Value> row_hints() const noexcept { return row_hints_; }
  std::span<const Value> col_hints() const noexcept { return col_hints_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> grid_;
  std::vector<Value> row_hints_;
  std::vector<Value> col_hints_;
};

/// Keep/cross decision per cell; `true` means the cell stays uncrossed and
/// counts toward its row and column sums.
class Mask {
 public:
  Mask(std::size_t rows, std::size_t cols, bool keep = false);

  static Mask all_kept(const Instance& inst) {
    return Mask(inst.rows(), inst.cols(), true);
  }
  static Mask all_crossed(const Instance& inst) {
    return Mask(inst.rows(), inst.cols(), false);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool kept(std::size_t row, std::size_t col) const noexcept {
    return keep_[row * cols_ + col] != 0;
  }
  void set(std::size_t row, std::size_t col, bool keep) noexcept {
    keep_[row * cols_ + col] = keep ? 1 : 0;
  }

  std::size_t count_kept() const noexcept;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> keep_;
};

/// Kept-value sum of every row. Throws DimensionMismatch if the mask shape
/// differs from the instance.
std::vector<Value> row_sums(const Instance& inst, const Mask& mask);
std::vector<Value> col_sums(const Instance& inst, const Mask& mask);

/// True iff every row and column sum matches its hint. A shape mismatch is
/// an error, never a `false`.
bool verify(const Instance& inst, const Mask& mask);

/// Same as verify(), also adding the number of cells read to `cell_visits`.
bool verify(const Instance& inst, const Mask& mask, std::size_t& cell_visits);

/// True iff every grid value is `lo` or `hi`. Requires 0 < lo < hi.
/// (1,3)-Sumplete instances are exactly those with is_two_valued(inst, 1, 3).
bool is_two_valued(const Instance& inst, Value lo, Value hi);

}  // namespace sumplete
