#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "stylic/alphabet.hpp"
#include "stylic/core.hpp"

namespace stylic {

// The stylic monoid on n letters, realized as the monoid of endofunctions
// of the set of columns induced by the left action. An element's identity
// is its full action table on all 2^n columns; the stored representative
// word is the shortlex-first word reaching that table and is not part of
// the identity.
//
// Built once by enumerate(), then frozen; all queries on a frozen monoid
// are const and thread-safe (the lazy J-ideal cache is mutex-guarded).
class StylMonoid {
 public:
  using ElementId = std::uint32_t;

  struct Options {
    bool memoize_mult = true;
    // full |M|^2 table only when it fits this budget
    std::size_t memoize_budget_bytes = std::size_t(256) << 20;
  };

  // Breadth-first closure from the identity under right multiplication by
  // letters, deduplicating by action table. Reps come out shortlex-first.
  static StylMonoid enumerate(int n);
  static StylMonoid enumerate(int n, Options opts);

  const Alphabet& alphabet() const { return alpha_; }
  int n() const { return alpha_.size(); }
  std::size_t size() const { return tables_.size(); }
  bool mult_memoized() const { return !mult_table_.empty(); }

  ElementId identity() const { return 0; }
  ElementId generator(Letter a) const { return generators_[a.index() - 1]; }

  // action of element x on a column: table lookup
  Column act(ElementId x, Column gamma) const {
    return Column::from_bits(tables_[x][gamma.bits()]);
  }
  const Word& rep_word(ElementId x) const { return rep_words_[x]; }

  // the element whose table is gamma -> left_act(w, gamma)
  ElementId element_of_word(const Word& w) const;
  ElementId multiply(ElementId x, ElementId y) const;

  bool stylic_equivalent(const Word& u, const Word& v) const {
    return element_of_word(u) == element_of_word(v);
  }

  // first column of the P-symbol of any representative: x . empty
  Column eta(ElementId x) const { return act(x, Column()); }
  // the set of letters fixing x on the left, as a column
  Column lfix(ElementId x) const;
  // the set of letters fixing x on the right: theta(eta(theta(x)))
  Column rfix(ElementId x) const;
  ElementId theta_element(ElementId x) const;
  bool idempotent(ElementId x) const { return multiply(x, x) == x; }

  // J-order: x <=_J y iff x lies in the two-sided ideal M y M. A partial
  // order since the stylic monoid is J-trivial.
  bool j_leq(ElementId x, ElementId y) const;
  std::size_t j_ideal_size(ElementId y) const;
  // element ids sorted so that x <_J y puts x first (a linear extension)
  std::vector<ElementId> j_linear_extension() const;

  nlohmann::json to_json() const;

 private:
  explicit StylMonoid(int n) : alpha_(n) {}

  using Table = std::vector<std::uint16_t>;  // column bits -> column bits

  Table table_of_word(const Word& w) const;
  ElementId id_of_table(const Table& t) const;
  const std::vector<bool>& ideal(ElementId y) const;

  struct TableHash {
    std::size_t operator()(const Table& t) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (std::uint16_t v : t) {
        h ^= v;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  Alphabet alpha_;
  std::vector<Table> tables_;
  std::vector<Word> rep_words_;
  std::vector<ElementId> generators_;
  std::unordered_map<Table, ElementId, TableHash> index_;
  std::vector<ElementId> mult_table_;  // empty when not memoized

  mutable std::unique_ptr<std::mutex> ideal_mutex_;
  mutable std::vector<std::unique_ptr<std::vector<bool>>> ideals_;
};

}  // namespace stylic
