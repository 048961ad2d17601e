#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "stylic/algebra.hpp"

namespace stylic {

// Cartan matrix of the stylic algebra: entry (gamma, delta) is the
// dimension of e_gamma K Styl(A) e_delta. Rows and columns are ordered by
// column bitmask (empty column first). Diagonal entries are >= 1 and the
// total sum is |Styl(A)|.
struct CartanMatrix {
  int n = 0;
  std::vector<Column> order;
  std::vector<std::vector<std::uint64_t>> entries;

  std::uint64_t total() const;
  std::uint64_t row_sum(std::size_t i) const;
  std::uint64_t col_sum(std::size_t j) const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

  std::string to_csv(const Alphabet& alpha) const;
  nlohmann::json to_json() const;
};

// entry (gamma, delta) = corner_dimension(gamma, delta), computed by exact
// rank; pairs are independent, so the work is spread over `threads` workers
// (0 = hardware concurrency)
CartanMatrix cartan_linear(const StylMonoid& m, const IdempotentSystem& sys,
                           unsigned threads = 1);

// entry (gamma, delta) = #{ x : eta(x) = gamma and rfix(x) = delta }
CartanMatrix cartan_combinatorial(const StylMonoid& m);

enum class Side { left, right };

// Basis of the indecomposable projective at gamma: the triangular-basis
// members e_eta(x) x with eta(x) = gamma (right side) or rfix(x) = gamma
// (left side). Verified against the corner spans by exact rank; throws
// std::runtime_error on any mismatch.
std::vector<AlgebraElement> projective_basis(const StylMonoid& m, const IdempotentSystem& sys,
                                             Column gamma, Side side);

}  // namespace stylic
