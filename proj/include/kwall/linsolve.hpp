#pragma once

// Sparse exact Gaussian elimination over Q.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kwall/rational.hpp"

namespace kwall {

using SparseRow = std::vector<std::pair<int, Rat>>;  // (column, value), columns increasing

struct LinearSolution {
  bool consistent = true;
  std::optional<std::size_t> inconsistent_row;  // first row found contradictory
  int rank = 0;
  std::vector<Rat> x;              // a solution with free variables set to 0
  std::vector<int> free_columns;
};

class SparseSystem {
 public:
  explicit SparseSystem(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  std::size_t rows() const { return rows_.size(); }
  /// Adds sum_c entries[c] x_c = rhs. Entries need not be sorted; zero values
  /// and repeated columns are merged.
  void add_row(const std::map<int, Rat>& entries, const Rat& rhs);

  /// Eliminates pivoting on the smallest remaining column of each row, so
  /// callers control fill-in through the column numbering.
  LinearSolution solve() const;

 private:
  int columns_;
  std::vector<std::pair<SparseRow, Rat>> rows_;
};

}  // namespace kwall
