#pragma once

#include <string>
#include <vector>

#include "stylic/alphabet.hpp"
#include "stylic/core.hpp"

namespace stylic {

// A semistandard Young tableau stored as its columns, left to right.
// Invariants: heights weakly decrease, and for consecutive columns the i-th
// smallest member of the right column is >= the i-th smallest member of the
// left one (rows weakly increase).
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<Column> columns);

  static bool valid_columns(const std::vector<Column>& columns);

  const std::vector<Column>& columns() const { return columns_; }
  bool empty() const { return columns_.empty(); }
  int height() const { return columns_.empty() ? 0 : columns_.front().height(); }
  int cells() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<Column> columns_;
};

// Schensted P-symbol by iterated column insertion: each letter of w enters
// column 1, a bumped letter enters column 2, and so on.
Tableau p_symbol(const Word& w);

// columns read left to right, each as a decreasing word; P(reading(T)) = T
Word column_reading_word(const Tableau& t);

inline bool plactic_equivalent(const Word& u, const Word& v) {
  return p_symbol(u) == p_symbol(v);
}

// French convention, one row per line, bottom row last
std::string render_french(const Tableau& t, const Alphabet& alpha);

}  // namespace stylic
