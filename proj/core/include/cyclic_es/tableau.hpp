#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclic_es/bigcount.hpp"
#include "cyclic_es/error.hpp"

namespace cyclic_es {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// A standard Young tableau on a rows x cols rectangle: the entries are
// exactly {1,..,rows*cols} and every row and every column is strictly
// increasing. Indices are 1-based; storage is row-major.
class YoungTableau {
 public:
  // Validates shape and both invariants. Throws InvalidShape,
  // NotAPermutationFilling, RowNotIncreasing or ColumnNotIncreasing; the
  // row/column checks run after the filling check and report the first
  // offending 1-based row/column.
  static YoungTableau from_rows(const std::vector<std::vector<int>>& entries);
  static YoungTableau from_flat(int rows, int cols, std::vector<int> row_major);
  // 1..n in reading order; the lexicographically smallest SYT of the shape.
  static YoungTableau row_major_filling(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const {
    return entries_[static_cast<size_t>((i - 1) * cols_ + (j - 1))];
  }
  const std::vector<int>& flat() const { return entries_; }
  std::vector<std::vector<int>> to_rows() const;

  bool operator==(const YoungTableau&) const = default;
  // Lexicographic order on the row-major entry sequence.
  bool operator<(const YoungTableau& other) const;

 private:
  YoungTableau(int rows, int cols, std::vector<int> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {}

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> entries_;

  friend class SytEnumerator;
};

// Number of standard Young tableaux of the rows x cols rectangle, by the
// hook-length formula in exact integer arithmetic.
BigCount count_syt_rect(int rows, int cols);

// |S_{k,l}| = |{permutations of length k*l with lis <= k and lds <= l}|
//           = count_syt_rect(l, k)^2.
BigCount count_extremal_linear(int k, int l);

// Streams every SYT of the rectangle exactly once, in lexicographic order
// of the row-major entry sequence; next() returns nullopt when exhausted.
class SytEnumerator {
 public:
  SytEnumerator(int rows, int cols);

  std::optional<YoungTableau> next();

 private:
  // Smallest feasible entry for `cell` that exceeds `floor_value`, or 0.
  int next_feasible(int cell, int floor_value) const;

  int rows_ = 0;
  int cols_ = 0;
  int size_ = 0;
  std::vector<int> entries_;  // row-major, 0 = empty
  std::vector<bool> used_;
  bool started_ = false;
  bool exhausted_ = false;
};

// Materializes the full stream. Throws BudgetExceeded when the hook-length
// count is larger than `budget`.
std::vector<YoungTableau> enumerate_syt_rect(
    int rows, int cols, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace cyclic_es
