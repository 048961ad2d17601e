#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace stylic {

// Exact coefficient types. Construction happens over the integers,
// rank/kernel computations over the rationals; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Dense matrix of exact rationals with rank, RREF and kernel computation by
// Gauss-Jordan elimination. Sizes here are desk scale; no sparsity tricks.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  ExactMatrix transposed() const;
  // reduced row echelon form; pivot_cols receives the pivot column of each
  // nonzero row when non-null
  ExactMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
  std::size_t rank() const;
  // basis of the right kernel { v : A v = 0 }, one vector per free column
  std::vector<std::vector<Rat>> kernel() const;
  // basis of { c : c^T A = 0 }, vectors of length rows()
  std::vector<std::vector<Rat>> left_kernel() const { return transposed().kernel(); }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> entries_;
};

// Incremental row space: rows inserted one at a time are reduced against a
// maintained echelon basis, so rank grows cheaply when most rows are
// dependent.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  // true when v was independent of the rows seen so far
  bool insert(std::vector<Rat> v);
  bool contains(std::vector<Rat> v) const;

 private:
  void reduce(std::vector<Rat>& v) const;

  std::size_t cols_;
  std::vector<std::vector<Rat>> rows_;   // echelon rows, pivot entry = 1
  std::vector<std::size_t> pivots_;      // pivot column per row, increasing
};

}  // namespace stylic
