#include "stylic/alphabet.hpp"

#include <stdexcept>

namespace stylic {

Alphabet::Alphabet(int n) : n_(n) {
  if (n < 1 || n > kMaxSize)
    throw std::out_of_range("alphabet size must be in 1..16, got " + std::to_string(n));
}

Letter Alphabet::letter(int index) const {
  Letter a(index);
  if (!valid(a))
    throw std::out_of_range("letter index " + std::to_string(index) + " outside 1.." + std::to_string(n_));
  return a;
}

std::vector<Column> Alphabet::columns() const {
  std::vector<Column> out;
  out.reserve(num_columns());
  for (std::uint32_t m = 0; m < num_columns(); ++m) out.push_back(Column::from_bits(m));
  return out;
}

Column Alphabet::theta(Column g) const {
  Column out;
  for (std::uint32_t b = g.bits(); b; b &= b - 1)
    out = out.with(theta(Letter(std::countr_zero(b) + 1)));
  return out;
}

Word Alphabet::theta(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(theta(*it));
  return out;
}

Letter Alphabet::parse_letter(char c) const {
  if (c < 'a' || c >= 'a' + n_)
    throw std::invalid_argument(std::string("letter '") + c + "' outside alphabet of size " + std::to_string(n_));
  return Letter(c - 'a' + 1);
}

Word Alphabet::parse_word(std::string_view s) const {
  Word out;
  out.reserve(s.size());
  for (char c : s) out.push_back(parse_letter(c));
  return out;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(letter_char(a));
  return out;
}

std::string Alphabet::column_name(Column g) const {
  if (g.empty()) return "ε";
  return format(g.as_word());
}

}  // namespace stylic
