#include "stylic/monoid.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stylic {

StylMonoid StylMonoid::enumerate(int n) { return enumerate(n, Options()); }

StylMonoid StylMonoid::enumerate(int n, Options opts) {
  StylMonoid m(n);
  m.ideal_mutex_ = std::make_unique<std::mutex>();
  const std::uint32_t ncols = m.alpha_.num_columns();

  // generator tables: column insertion of each letter
  std::vector<Table> gen_tables(n);
  for (int i = 0; i < n; ++i) {
    gen_tables[i].resize(ncols);
    for (std::uint32_t g = 0; g < ncols; ++g)
      gen_tables[i][g] =
          static_cast<std::uint16_t>(left_insert(Letter(i + 1), Column::from_bits(g)).column.bits());
  }

  Table ident(ncols);
  for (std::uint32_t g = 0; g < ncols; ++g) ident[g] = static_cast<std::uint16_t>(g);
  m.tables_.push_back(ident);
  m.rep_words_.push_back({});
  m.index_.emplace(std::move(ident), 0);

  // BFS with letters in increasing order gives shortlex-first rep words:
  // the shortlex-minimal word of an element is a minimal word extended by
  // one letter, so the prefix set is explored in order.
  for (ElementId x = 0; x < m.tables_.size(); ++x) {
    for (int i = 0; i < n; ++i) {
      Table t(ncols);
      const Table& tx = m.tables_[x];
      const Table& ta = gen_tables[i];
      for (std::uint32_t g = 0; g < ncols; ++g) t[g] = tx[ta[g]];
      auto [it, fresh] = m.index_.try_emplace(std::move(t), static_cast<ElementId>(m.tables_.size()));
      if (fresh) {
        m.tables_.push_back(it->first);
        Word w = m.rep_words_[x];
        w.push_back(Letter(i + 1));
        m.rep_words_.push_back(std::move(w));
      }
    }
  }

  m.generators_.reserve(n);
  for (int i = 0; i < n; ++i) m.generators_.push_back(m.id_of_table(gen_tables[i]));

  const std::size_t sz = m.tables_.size();
  if (opts.memoize_mult && sz * sz * sizeof(ElementId) <= opts.memoize_budget_bytes) {
    m.mult_table_.resize(sz * sz);
    for (ElementId x = 0; x < sz; ++x) {
      const Table& tx = m.tables_[x];
      for (ElementId y = 0; y < sz; ++y) {
        const Table& ty = m.tables_[y];
        Table t(ncols);
        for (std::uint32_t g = 0; g < ncols; ++g) t[g] = tx[ty[g]];
        m.mult_table_[x * sz + y] = m.id_of_table(t);
      }
    }
  }

  m.ideals_.resize(sz);
  return m;
}

StylMonoid::Table StylMonoid::table_of_word(const Word& w) const {
  const std::uint32_t ncols = alpha_.num_columns();
  Table t(ncols);
  for (std::uint32_t g = 0; g < ncols; ++g)
    t[g] = static_cast<std::uint16_t>(left_act(w, Column::from_bits(g)).bits());
  return t;
}

StylMonoid::ElementId StylMonoid::id_of_table(const Table& t) const {
  auto it = index_.find(t);
  assert(it != index_.end());  // closed under multiplication
  return it->second;
}

StylMonoid::ElementId StylMonoid::element_of_word(const Word& w) const {
  for (Letter a : w)
    if (!alpha_.valid(a)) throw std::out_of_range("word contains a letter outside the alphabet");
  return id_of_table(table_of_word(w));
}

StylMonoid::ElementId StylMonoid::multiply(ElementId x, ElementId y) const {
  if (!mult_table_.empty()) return mult_table_[x * size() + y];
  const std::uint32_t ncols = alpha_.num_columns();
  const Table& tx = tables_[x];
  const Table& ty = tables_[y];
  Table t(ncols);
  for (std::uint32_t g = 0; g < ncols; ++g) t[g] = tx[ty[g]];
  return id_of_table(t);
}

Column StylMonoid::lfix(ElementId x) const {
  Column out;
  for (int i = 1; i <= n(); ++i)
    if (multiply(generator(Letter(i)), x) == x) out = out.with(Letter(i));
  return out;
}

Column StylMonoid::rfix(ElementId x) const { return alpha_.theta(eta(theta_element(x))); }

StylMonoid::ElementId StylMonoid::theta_element(ElementId x) const {
  return element_of_word(alpha_.theta(rep_word(x)));
}

const std::vector<bool>& StylMonoid::ideal(ElementId y) const {
  std::scoped_lock lock(*ideal_mutex_);
  auto& slot = ideals_[y];
  if (!slot) {
    // two-sided ideal M y M: closure of {y} under left and right
    // multiplication by the generators
    auto members = std::make_unique<std::vector<bool>>(size(), false);
    std::deque<ElementId> queue{y};
    (*members)[y] = true;
    while (!queue.empty()) {
      ElementId z = queue.front();
      queue.pop_front();
      for (ElementId g : generators_) {
        for (ElementId w : {multiply(g, z), multiply(z, g)}) {
          if (!(*members)[w]) {
            (*members)[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    slot = std::move(members);
  }
  return *slot;
}

bool StylMonoid::j_leq(ElementId x, ElementId y) const { return ideal(y)[x]; }

std::size_t StylMonoid::j_ideal_size(ElementId y) const {
  const auto& members = ideal(y);
  return static_cast<std::size_t>(std::count(members.begin(), members.end(), true));
}

std::vector<StylMonoid::ElementId> StylMonoid::j_linear_extension() const {
  // x <_J y implies ideal(x) strictly contained in ideal(y), so sorting by
  // ideal size gives a linear extension; id breaks ties deterministically
  std::vector<ElementId> order(size());
  std::vector<std::size_t> isz(size());
  for (ElementId x = 0; x < size(); ++x) {
    order[x] = x;
    isz[x] = j_ideal_size(x);
  }
  std::sort(order.begin(), order.end(),
            [&](ElementId a, ElementId b) { return isz[a] != isz[b] ? isz[a] < isz[b] : a < b; });
  return order;
}

nlohmann::json StylMonoid::to_json() const {
  nlohmann::json elements = nlohmann::json::array();
  for (ElementId x = 0; x < size(); ++x) {
    nlohmann::json table = nlohmann::json::array();
    for (std::uint16_t v : tables_[x]) table.push_back(v);
    elements.push_back({{"id", x}, {"rep_word", alpha_.format(rep_words_[x])}, {"table", std::move(table)}});
  }
  return {{"n", n()}, {"size", size()}, {"elements", std::move(elements)}};
}

}  // namespace stylic
