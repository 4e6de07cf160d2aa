#include "cyclic_es/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclic_es {

namespace {

void require_shape(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    std::ostringstream msg;
    msg << "InvalidShape: rows and cols must be >= 1, got " << rows << "x"
        << cols;
    throw Error(errc::invalid_shape, msg.str());
  }
}

}  // namespace

YoungTableau YoungTableau::from_rows(
    const std::vector<std::vector<int>>& entries) {
  const int rows = static_cast<int>(entries.size());
  if (rows < 1) require_shape(rows, 0);
  const int cols = static_cast<int>(entries.front().size());
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != cols) {
      throw Error(errc::invalid_shape,
                  "InvalidShape: rows must all have the same length");
    }
  }
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
  for (const auto& row : entries) flat.insert(flat.end(), row.begin(), row.end());
  return from_flat(rows, cols, std::move(flat));
}

YoungTableau YoungTableau::from_flat(int rows, int cols,
                                     std::vector<int> row_major) {
  require_shape(rows, cols);
  const int n = rows * cols;
  if (static_cast<int>(row_major.size()) != n) {
    std::ostringstream msg;
    msg << "InvalidShape: expected " << n << " entries for a " << rows << "x"
        << cols << " rectangle, got " << row_major.size();
    throw Error(errc::invalid_shape, msg.str());
  }
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : row_major) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)]) {
      std::ostringstream msg;
      msg << "NotAPermutationFilling: entries must be exactly {1,..," << n
          << "}";
      throw Error(errc::not_a_permutation_filling, msg.str());
    }
    seen[static_cast<size_t>(v)] = true;
  }
  auto at = [&](int i, int j) {
    return row_major[static_cast<size_t>((i - 1) * cols + (j - 1))];
  };
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j < cols; ++j) {
      if (at(i, j) >= at(i, j + 1)) {
        std::ostringstream msg;
        msg << "RowNotIncreasing: row " << i << " is not strictly increasing";
        throw Error(errc::row_not_increasing, msg.str());
      }
    }
  }
  for (int j = 1; j <= cols; ++j) {
    for (int i = 1; i < rows; ++i) {
      if (at(i, j) >= at(i + 1, j)) {
        std::ostringstream msg;
        msg << "ColumnNotIncreasing: column " << j
            << " is not strictly increasing";
        throw Error(errc::column_not_increasing, msg.str());
      }
    }
  }
  return YoungTableau(rows, cols, std::move(row_major));
}

YoungTableau YoungTableau::row_major_filling(int rows, int cols) {
  require_shape(rows, cols);
  std::vector<int> flat(static_cast<size_t>(rows) * static_cast<size_t>(cols));
  std::iota(flat.begin(), flat.end(), 1);
  return YoungTableau(rows, cols, std::move(flat));
}

std::vector<std::vector<int>> YoungTableau::to_rows() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    out[static_cast<size_t>(i)].assign(
        entries_.begin() + static_cast<long>(i) * cols_,
        entries_.begin() + static_cast<long>(i + 1) * cols_);
  }
  return out;
}

bool YoungTableau::operator<(const YoungTableau& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  return entries_ < other.entries_;
}

BigCount count_syt_rect(int rows, int cols) {
  require_shape(rows, cols);
  const BigCount numerator = factorial_big(rows * cols);
  BigCount denominator = 1;
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      denominator *= (rows - i) + (cols - j) + 1;
    }
  }
  BigCount quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error(
        "hook-length product does not divide the factorial");
  }
  return quotient;
}

BigCount count_extremal_linear(int k, int l) {
  const BigCount per_tableau = count_syt_rect(l, k);  // throws InvalidShape
  return per_tableau * per_tableau;
}

SytEnumerator::SytEnumerator(int rows, int cols)
    : rows_(rows), cols_(cols), size_(rows * cols) {
  require_shape(rows, cols);
  entries_.assign(static_cast<size_t>(size_), 0);
  used_.assign(static_cast<size_t>(size_) + 1, false);
}

int SytEnumerator::next_feasible(int cell, int floor_value) const {
  const int r = cell / cols_;
  const int c = cell % cols_;
  const int left = c > 0 ? entries_[static_cast<size_t>(cell - 1)] : 0;
  const int up = r > 0 ? entries_[static_cast<size_t>(cell - cols_)] : 0;
  // The (r+1)x(c+1) upper-left rectangle must be filled with smaller values,
  // and everything weakly south-east must still fit above this entry.
  const int lo = std::max({floor_value, left, up, (r + 1) * (c + 1) - 1}) + 1;
  const int hi = size_ - (rows_ - r) * (cols_ - c) + 1;
  for (int v = lo; v <= hi; ++v) {
    if (!used_[static_cast<size_t>(v)]) return v;
  }
  return 0;
}

std::optional<YoungTableau> SytEnumerator::next() {
  if (exhausted_) return std::nullopt;
  int cell;
  int floor_value;
  if (!started_) {
    started_ = true;
    cell = 0;
    floor_value = 0;
  } else {
    cell = size_ - 1;
    floor_value = entries_[static_cast<size_t>(cell)];
    used_[static_cast<size_t>(floor_value)] = false;
    entries_[static_cast<size_t>(cell)] = 0;
  }
  while (true) {
    const int v = next_feasible(cell, floor_value);
    if (v != 0) {
      entries_[static_cast<size_t>(cell)] = v;
      used_[static_cast<size_t>(v)] = true;
      if (cell == size_ - 1) {
        return YoungTableau(rows_, cols_, entries_);
      }
      ++cell;
      floor_value = 0;
    } else {
      if (cell == 0) {
        exhausted_ = true;
        return std::nullopt;
      }
      --cell;
      floor_value = entries_[static_cast<size_t>(cell)];
      used_[static_cast<size_t>(floor_value)] = false;
      entries_[static_cast<size_t>(cell)] = 0;
    }
  }
}

std::vector<YoungTableau> enumerate_syt_rect(int rows, int cols,
                                             std::uint64_t budget) {
  const BigCount total = count_syt_rect(rows, cols);
  if (total > BigCount(budget)) {
    std::ostringstream msg;
    msg << "BudgetExceeded: " << total.str() << " tableaux of shape " << rows
        << "x" << cols << " exceed the cap of " << budget;
    throw Error(errc::budget_exceeded, msg.str());
  }
  std::vector<YoungTableau> out;
  out.reserve(static_cast<size_t>(total));
  SytEnumerator stream(rows, cols);
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace cyclic_es
