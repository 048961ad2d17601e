#include "stylic/cartan.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace stylic {

std::uint64_t CartanMatrix::total() const {
  std::uint64_t t = 0;
  for (const auto& row : entries) t = std::accumulate(row.begin(), row.end(), t);
  return t;
}

std::uint64_t CartanMatrix::row_sum(std::size_t i) const {
  return std::accumulate(entries[i].begin(), entries[i].end(), std::uint64_t(0));
}

std::uint64_t CartanMatrix::col_sum(std::size_t j) const {
  std::uint64_t t = 0;
  for (const auto& row : entries) t += row[j];
  return t;
}

std::string CartanMatrix::to_csv(const Alphabet& alpha) const {
  std::string out;
  for (Column g : order) out += "," + alpha.column_name(g);
  out += "\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    out += alpha.column_name(order[i]);
    for (std::uint64_t v : entries[i]) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

nlohmann::json CartanMatrix::to_json() const {
  nlohmann::json ord = nlohmann::json::array();
  for (Column g : order) ord.push_back(g.bits());
  return {{"n", n}, {"order", std::move(ord)}, {"entries", entries}};
}

namespace {

CartanMatrix empty_matrix(const StylMonoid& m) {
  CartanMatrix c;
  c.n = m.n();
  c.order = m.alphabet().columns();
  c.entries.assign(c.order.size(), std::vector<std::uint64_t>(c.order.size(), 0));
  return c;
}

}  // namespace

CartanMatrix cartan_linear(const StylMonoid& m, const IdempotentSystem& sys, unsigned threads) {
  CartanMatrix c = empty_matrix(m);
  const std::size_t ncols = c.order.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(ncols));

  // rows are claimed atomically; a row's left products are shared across
  // all of its columns
  std::atomic<std::size_t> next_row{0};
  auto worker = [&] {
    for (std::size_t i; (i = next_row.fetch_add(1)) < ncols;) {
      auto left = corner_left_products(m, sys, c.order[i]);
      for (std::size_t j = 0; j < ncols; ++j)
        c.entries[i][j] = corner_dimension_with(left, sys.at(c.order[j]));
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return c;
}

CartanMatrix cartan_combinatorial(const StylMonoid& m) {
  CartanMatrix c = empty_matrix(m);
  for (StylMonoid::ElementId x = 0; x < m.size(); ++x)
    ++c.entries[m.eta(x).bits()][m.rfix(x).bits()];
  return c;
}

std::vector<AlgebraElement> projective_basis(const StylMonoid& m, const IdempotentSystem& sys,
                                             Column gamma, Side side) {
  std::vector<AlgebraElement> candidates;
  for (StylMonoid::ElementId x = 0; x < m.size(); ++x) {
    Column key = side == Side::right ? m.eta(x) : m.rfix(x);
    if (key == gamma) candidates.push_back(sys.at(m.eta(x)) * AlgebraElement::of(m, x));
  }

  RowSpace candidate_space(m.size());
  for (const AlgebraElement& b : candidates)
    if (!candidate_space.insert(b.to_dense()))
      throw std::runtime_error("projective basis: dependent candidate at column " +
                               m.alphabet().column_name(gamma));

  // the candidates must span the corner e_gamma KM (right) / KM e_gamma
  // (left); on the left also witness membership via b * e_gamma = b
  RowSpace corner_space(m.size());
  const AlgebraElement& e = sys.at(gamma);
  for (StylMonoid::ElementId x = 0; x < m.size(); ++x) {
    AlgebraElement v =
        side == Side::right ? e * AlgebraElement::of(m, x) : AlgebraElement::of(m, x) * e;
    if (!v.is_zero()) corner_space.insert(v.to_dense());
  }
  if (side == Side::left)
    for (const AlgebraElement& b : candidates)
      if (!(b * e == b))
        throw std::runtime_error("projective basis: candidate not right-fixed by e_" +
                                 m.alphabet().column_name(gamma));

  if (candidate_space.rank() != corner_space.rank())
    throw std::runtime_error("projective basis: rank " + std::to_string(candidate_space.rank()) +
                             " does not match corner dimension " +
                             std::to_string(corner_space.rank()) + " at column " +
                             m.alphabet().column_name(gamma));
  return candidates;
}

}  // namespace stylic
