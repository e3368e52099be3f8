#include "kwall/linsolve.hpp"

#include <algorithm>
#include <unordered_map>

#include "kwall/errors.hpp"

namespace kwall {

void SparseSystem::add_row(const std::map<int, Rat>& entries, const Rat& rhs) {
  SparseRow row;
  for (const auto& [c, v] : entries) {
    if (c < 0 || c >= columns_) throw ValidationError("column index out of range");
    if (v != 0) row.emplace_back(c, v);
  }
  rows_.emplace_back(std::move(row), rhs);
}

LinearSolution SparseSystem::solve() const {
  struct Pivot {
    SparseRow row;  // leading entry is 1 at the pivot column
    Rat rhs;
  };
  std::unordered_map<int, Pivot> pivots;
  LinearSolution out;

  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::map<int, Rat> work(rows_[i].first.begin(), rows_[i].first.end());
    Rat rhs = rows_[i].second;
    for (auto it = work.begin(); it != work.end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const Rat factor = it->second;
      const int col = it->first;
      for (const auto& [c, v] : p->second.row) {
        Rat& slot = work[c];
        slot -= factor * v;
      }
      rhs -= factor * p->second.rhs;
      // Columns touched are all > col; drop zeros and resume after col.
      for (auto z = work.upper_bound(col); z != work.end();)
        z = z->second == 0 ? work.erase(z) : std::next(z);
      it = work.erase(work.find(col));
    }
    if (work.empty()) {
      if (rhs != 0 && out.consistent) {
        out.consistent = false;
        out.inconsistent_row = i;
      }
      continue;
    }
    const Rat lead = work.begin()->second;
    Pivot piv;
    for (const auto& [c, v] : work) piv.row.emplace_back(c, Rat(v / lead));
    piv.rhs = rhs / lead;
    pivots.emplace(work.begin()->first, std::move(piv));
  }

  out.rank = static_cast<int>(pivots.size());
  out.x.assign(columns_, Rat(0));
  for (int c = columns_ - 1; c >= 0; --c) {
    auto p = pivots.find(c);
    if (p == pivots.end()) {
      out.free_columns.push_back(c);
      continue;
    }
    Rat value = p->second.rhs;
    for (std::size_t k = 1; k < p->second.row.size(); ++k)
      value -= p->second.row[k].second * out.x[p->second.row[k].first];
    out.x[c] = value;
  }
  std::reverse(out.free_columns.begin(), out.free_columns.end());
  return out;
}

}  // namespace kwall
