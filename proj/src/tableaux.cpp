#include "stylic/tableaux.hpp"

#include <stdexcept>

namespace stylic {

Tableau::Tableau(std::vector<Column> columns) : columns_(std::move(columns)) {
  if (!valid_columns(columns_)) throw std::invalid_argument("not a semistandard column sequence");
}

bool Tableau::valid_columns(const std::vector<Column>& columns) {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k].empty()) return false;
    if (k + 1 < columns.size()) {
      const Column left = columns[k];
      const Column right = columns[k + 1];
      if (right.height() > left.height()) return false;
      // pairing criterion: i-th smallest on the right >= i-th smallest on
      // the left, for every row i of the right column
      auto lm = left.members();
      auto rm = right.members();
      for (std::size_t i = 0; i < rm.size(); ++i)
        if (rm[i] < lm[i]) return false;
    }
  }
  return true;
}

int Tableau::cells() const {
  int total = 0;
  for (Column c : columns_) total += c.height();
  return total;
}

Tableau p_symbol(const Word& w) {
  // letters enter right to left, so that P(uv) inserts u into P(v) and the
  // first column is the left action of w on the empty column
  std::vector<Column> cols;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    std::optional<Letter> carry = *it;
    for (std::size_t k = 0; carry && k < cols.size(); ++k) {
      auto [col, bumped] = left_insert(*carry, cols[k]);
      cols[k] = col;
      carry = bumped;
    }
    if (carry) cols.push_back(Column().with(*carry));
  }
  return Tableau(std::move(cols));
}

Word column_reading_word(const Tableau& t) {
  Word out;
  for (Column c : t.columns()) {
    Word cw = c.as_word();
    out.insert(out.end(), cw.begin(), cw.end());
  }
  return out;
}

std::string render_french(const Tableau& t, const Alphabet& alpha) {
  std::string out;
  for (int row = t.height(); row >= 1; --row) {
    for (Column c : t.columns()) {
      if (c.height() < row) break;
      if (!out.empty() && out.back() != '\n') out.push_back(' ');
      out.push_back(alpha.letter_char(c.members()[row - 1]));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace stylic
