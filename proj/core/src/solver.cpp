#include "sumplete/solver.hpp"

#include <stdexcept>

#include "sumplete/error.hpp"

namespace sumplete {

const char* to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::Unsolvable: return "unsolvable";
    case SolveStatus::ResourceLimit: return "resource-limit";
  }
  return "unknown";
}

namespace {

// Enumerates the candidates of one row into `out` as consecutive blocks of
// `values.size()` flags. Returns false once more than `limit` were produced.
class RowEnumerator {
 public:
  RowEnumerator(std::span<const Value> values, Value target,
                std::vector<std::uint8_t>& out, std::uint64_t limit)
      : values_(values), target_(target), out_(out), limit_(limit),
        suffix_(values.size() + 1, 0), current_(values.size(), 0) {
    for (std::size_t j = values.size(); j-- > 0;) {
      suffix_[j] = suffix_[j + 1] + values[j];
    }
  }

  bool run() { return target_ >= 0 && visit(0, 0); }
  std::uint64_t produced() const { return produced_; }

 private:
  bool visit(std::size_t cell, Value sum) {
    if (sum > target_ || sum + suffix_[cell] < target_) return true;
    if (cell == values_.size()) {
      if (++produced_ > limit_) return false;
      out_.insert(out_.end(), current_.begin(), current_.end());
      return true;
    }
    current_[cell] = 0;
    if (!visit(cell + 1, sum)) return false;
    current_[cell] = 1;
    const bool ok = visit(cell + 1, sum + values_[cell]);
    current_[cell] = 0;
    return ok;
  }

  std::span<const Value> values_;
  Value target_;
  std::vector<std::uint8_t>& out_;
  std::uint64_t limit_;
  std::uint64_t produced_ = 0;
  std::vector<Value> suffix_;
  std::vector<std::uint8_t> current_;
};

// Reachable subset sums of each column's cells in rows [i, rows), truncated
// at the column hint. Columns whose table would not fit the word budget are
// left disabled and only get interval pruning.
class ColumnReach {
 public:
  static constexpr std::size_t kWordBudget = std::size_t{1} << 22;

  ColumnReach() = default;

  explicit ColumnReach(const Instance& inst)
      : rows_(inst.rows()), columns_(inst.cols()) {
    std::size_t used = 0;
    for (std::size_t j = 0; j < inst.cols(); ++j) {
      auto& col = columns_[j];
      const auto hint = static_cast<std::size_t>(inst.col_hint(j));
      col.words = hint / 64 + 1;
      const std::size_t need = col.words * (rows_ + 1);
      if (need > kWordBudget - used) continue;
      used += need;
      col.enabled = true;
      col.bits.assign(need, 0);
      set(col, rows_, 0);
      for (std::size_t i = rows_; i-- > 0;) {
        shift_or(col, i, static_cast<std::size_t>(inst.at(i, j)), hint);
      }
    }
  }

  /// Can the rows from `row` downward supply exactly `need` in column j?
  /// Disabled columns answer true.
  bool reachable(std::size_t row, std::size_t j, Value need) const {
    const auto& col = columns_[j];
    if (!col.enabled) return true;
    const auto n = static_cast<std::size_t>(need);
    if (n / 64 >= col.words) return false;
    return (col.bits[row * col.words + n / 64] >> (n % 64)) & 1U;
  }

 private:
  struct Column {
    bool enabled = false;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;  // (rows+1) blocks of `words` words
  };

  static void set(Column& col, std::size_t row, std::size_t bit) {
    col.bits[row * col.words + bit / 64] |= std::uint64_t{1} << (bit % 64);
  }

  // block[row] = block[row+1] | (block[row+1] << shift), bits above `limit`
  // dropped.
  static void shift_or(Column& col, std::size_t row, std::size_t shift,
                       std::size_t limit) {
    const std::uint64_t* src = &col.bits[(row + 1) * col.words];
    std::uint64_t* dst = &col.bits[row * col.words];
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    for (std::size_t w = 0; w < col.words; ++w) {
      std::uint64_t shifted = 0;
      if (w >= word_shift) {
        shifted = src[w - word_shift] << bit_shift;
        if (bit_shift != 0 && w > word_shift) {
          shifted |= src[w - word_shift - 1] >> (64 - bit_shift);
        }
      }
      dst[w] = src[w] | shifted;
    }
    const std::size_t tail = limit % 64 + 1;
    if (tail < 64) dst[col.words - 1] &= (std::uint64_t{1} << tail) - 1;
  }

  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

class Search {
 public:
  enum class Mode { First, Count };

  Search(const Instance& inst, const SolverConfig& cfg, Mode mode,
         const std::function<void(const Mask&)>* on_solution)
      : inst_(inst), cfg_(cfg), mode_(mode), on_solution_(on_solution),
        rows_(inst.rows()), cols_(inst.cols()),
        cap_(cfg.solution_cap.value_or(kDefaultSolutionCap)),
        kept_(cols_, 0), below_((rows_ + 1) * cols_, 0), choice_(rows_, 0) {
    if (cfg.node_limit && *cfg.node_limit == 0) {
      throw Error(ErrorKind::Precondition, "node_limit", "must be at least 1");
    }
    if (cfg.solution_cap && *cfg.solution_cap == 0) {
      throw Error(ErrorKind::Precondition, "solution_cap", "must be at least 1");
    }
  }

  void run() {
    const auto start = std::chrono::steady_clock::now();
    if (prepare()) {
      if (feasible(0)) descend(0);
    }
    if (!cfg_.deterministic) {
      stats_.elapsed = std::chrono::steady_clock::now() - start;
    }
  }

  std::uint64_t count() const { return count_; }
  bool limit_hit() const { return limit_hit_; }
  bool exhausted() const { return !limit_hit_ && !stopped_; }
  const std::optional<Mask>& first() const { return first_; }
  const SolveStats& stats() const { return stats_; }

 private:
  // Builds candidate lists and the column tables. False if the candidate
  // budget ran out.
  bool prepare() {
    candidates_.resize(rows_);
    std::uint64_t remaining = cfg_.candidate_limit;
    for (std::size_t i = 0; i < rows_; ++i) {
      RowEnumerator rows(inst_.row(i), inst_.row_hint(i), candidates_[i],
                         remaining);
      if (!rows.run()) {
        limit_hit_ = true;
        return false;
      }
      remaining -= rows.produced();
    }
    for (std::size_t i = rows_; i-- > 0;) {
      for (std::size_t j = 0; j < cols_; ++j) {
        below_[i * cols_ + j] = below_[(i + 1) * cols_ + j] + inst_.at(i, j);
      }
    }
    if (cfg_.pruning == Pruning::Reachability) reach_ = ColumnReach(inst_);
    return true;
  }

  // Column check once rows [0, next_row) are fixed.
  bool feasible(std::size_t next_row) const {
    if (cfg_.pruning == Pruning::None) return true;
    const Value* below = &below_[next_row * cols_];
    for (std::size_t j = 0; j < cols_; ++j) {
      const Value hint = inst_.col_hint(j);
      if (kept_[j] > hint || kept_[j] + below[j] < hint) return false;
    }
    if (cfg_.pruning == Pruning::Reachability) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!reach_.reachable(next_row, j, inst_.col_hint(j) - kept_[j])) {
          return false;
        }
      }
    }
    return true;
  }

  void apply(std::size_t row, std::size_t k, int sign) {
    const std::uint8_t* flags = &candidates_[row][k * cols_];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (flags[j]) kept_[j] += sign * inst_.at(row, j);
    }
  }

  // Returns false when the search must stop.
  bool descend(std::size_t row) {
    if (cfg_.node_limit && stats_.nodes_expanded >= *cfg_.node_limit) {
      limit_hit_ = true;
      return false;
    }
    ++stats_.nodes_expanded;
    if (row == rows_) return leaf();

    const std::size_t n = candidates_[row].size() / cols_;
    for (std::size_t k = 0; k < n; ++k) {
      ++stats_.row_subsets_enumerated;
      choice_[row] = k;
      apply(row, k, +1);
      const bool go_on = !feasible(row + 1) || descend(row + 1);
      apply(row, k, -1);
      if (!go_on) return false;
    }
    return true;
  }

  bool leaf() {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (kept_[j] != inst_.col_hint(j)) return true;
    }
    ++count_;
    if (!first_ || on_solution_) {
      Mask mask = current_mask();
      if (!verify(inst_, mask)) {
        throw std::logic_error("solver produced a mask that does not verify");
      }
      if (on_solution_) (*on_solution_)(mask);
      if (!first_) first_ = std::move(mask);
    }
    if (mode_ == Mode::First || count_ >= cap_) {
      stopped_ = true;
      return false;
    }
    return true;
  }

  Mask current_mask() const {
    Mask mask(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const std::uint8_t* flags = &candidates_[i][choice_[i] * cols_];
      for (std::size_t j = 0; j < cols_; ++j) mask.set(i, j, flags[j] != 0);
    }
    return mask;
  }

  const Instance& inst_;
  const SolverConfig& cfg_;
  Mode mode_;
  const std::function<void(const Mask&)>* on_solution_;
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t cap_;

  std::vector<std::vector<std::uint8_t>> candidates_;
  std::vector<Value> kept_;
  std::vector<Value> below_;  // below_[i*cols+j]: column j total over rows >= i
  ColumnReach reach_;
  std::vector<std::size_t> choice_;

  SolveStats stats_;
  std::uint64_t count_ = 0;
  std::optional<Mask> first_;
  bool limit_hit_ = false;
  bool stopped_ = false;
};

}  // namespace

std::vector<RowChoice> row_candidates(std::span<const Value> values,
                                      Value target) {
  std::vector<std::uint8_t> flat;
  RowEnumerator rows(values, target, flat, UINT64_MAX);
  rows.run();
  std::vector<RowChoice> out;
  const std::size_t width = values.size();
  if (width == 0) return out;
  for (std::size_t k = 0; k < flat.size() / width; ++k) {
    out.emplace_back(flat.begin() + k * width, flat.begin() + (k + 1) * width);
  }
  return out;
}

SolveOutcome solve(const Instance& inst, const SolverConfig& cfg) {
  Search search(inst, cfg, Search::Mode::First, nullptr);
  search.run();
  SolveOutcome out;
  out.stats = search.stats();
  if (search.first()) {
    out.status = SolveStatus::Solved;
    out.witness = search.first();
  } else {
    out.status = search.limit_hit() ? SolveStatus::ResourceLimit
                                    : SolveStatus::Unsolvable;
  }
  return out;
}

CountOutcome for_each_solution(const Instance& inst, const SolverConfig& cfg,
                               const std::function<void(const Mask&)>& on_solution) {
  Search search(inst, cfg, Search::Mode::Count,
                on_solution ? &on_solution : nullptr);
  search.run();
  return {search.count(), search.exhausted(), search.stats()};
}

CountOutcome count_solutions(const Instance& inst, const SolverConfig& cfg) {
  return for_each_solution(inst, cfg, {});
}

}  // namespace sumplete
