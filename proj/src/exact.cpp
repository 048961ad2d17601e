#include "stylic/exact.hpp"

#include <algorithm>
#include <cassert>

namespace stylic {

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
  ExactMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t j = col; j < cols_; ++j) std::swap(m(row, j), m(pivot, j));
    Rat inv = 1 / m(row, col);
    for (std::size_t j = col; j < cols_; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(row, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++row;
  }
  return m;
}

std::size_t ExactMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::vector<std::vector<Rat>> ExactMatrix::kernel() const {
  std::vector<std::size_t> pivots;
  ExactMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowSpace::reduce(std::vector<Rat>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[pivots_[i]];
    if (c == 0) continue;
    Rat f = c;  // pivot entries are 1
    const auto& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < cols_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
}

bool RowSpace::insert(std::vector<Rat> v) {
  assert(v.size() == cols_);
  reduce(v);
  std::size_t p = 0;
  while (p < cols_ && v[p] == 0) ++p;
  if (p == cols_) return false;
  Rat inv = 1 / v[p];
  for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
  // keep pivots_ sorted so reduction stays one pass
  std::size_t pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool RowSpace::contains(std::vector<Rat> v) const {
  assert(v.size() == cols_);
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace stylic
