#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stylic {

// A letter of the ambient totally ordered alphabet, 1-based: 1 is the
// smallest letter. Rendered as 'a'..'p' (alphabet sizes up to 16).
class Letter {
 public:
  explicit constexpr Letter(int index) : index_(index) {}
  constexpr int index() const { return index_; }
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  int index_;
};

using Word = std::vector<Letter>;

// A column: a subset of {1..n}, letter i stored at bit i-1. Read as a word
// it is the strictly decreasing product of its members; the empty column is
// valid. Canonical and cheap to hash, with O(1) min/max via bit scans.
class Column {
 public:
  constexpr Column() = default;
  static constexpr Column from_bits(std::uint32_t bits) { return Column(bits); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int height() const { return std::popcount(bits_); }
  constexpr bool contains(Letter a) const {
    return (bits_ >> (a.index() - 1)) & 1u;
  }
  constexpr Column with(Letter a) const {
    return Column(bits_ | (1u << (a.index() - 1)));
  }
  constexpr Column without(Letter a) const {
    return Column(bits_ & ~(1u << (a.index() - 1)));
  }

  // pre: !empty()
  Letter min_letter() const { return Letter(std::countr_zero(bits_) + 1); }
  Letter max_letter() const { return Letter(std::bit_width(bits_)); }

  // largest member <= c, if any
  std::optional<Letter> floor(Letter c) const {
    std::uint32_t below = bits_ & ((c.index() >= 32) ? ~0u : ((1u << c.index()) - 1));
    if (below == 0) return std::nullopt;
    return Letter(std::bit_width(below));
  }
  // smallest member >= a, if any
  std::optional<Letter> ceil(Letter a) const {
    std::uint32_t above = bits_ & ~((1u << (a.index() - 1)) - 1);
    if (above == 0) return std::nullopt;
    return Letter(std::countr_zero(above) + 1);
  }

  // members in increasing order
  std::vector<Letter> members() const {
    std::vector<Letter> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(Letter(std::countr_zero(b) + 1));
    return out;
  }

  // the column as a word: members in strictly decreasing order
  Word as_word() const {
    Word out;
    std::uint32_t b = bits_;
    while (b) {
      int top = std::bit_width(b);
      out.push_back(Letter(top));
      b &= ~(1u << (top - 1));
    }
    return out;
  }

  friend constexpr auto operator<=>(Column, Column) = default;

 private:
  explicit constexpr Column(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

// sum of the letter indices of the members; weight of the empty column is 0
inline int column_weight(Column g) {
  int w = 0;
  for (std::uint32_t b = g.bits(); b; b &= b - 1)
    w += std::countr_zero(b) + 1;
  return w;
}

// Runtime alphabet context. Carries the size n (1..16, enforced) and the
// order-reversing involution theta together with parsing/formatting helpers.
class Alphabet {
 public:
  static constexpr int kMaxSize = 16;

  explicit Alphabet(int n);

  int size() const { return n_; }
  std::uint32_t num_columns() const { return 1u << n_; }
  bool valid(Letter a) const { return a.index() >= 1 && a.index() <= n_; }
  Letter letter(int index) const;

  // all columns, ordered by bitmask value (empty column first)
  std::vector<Column> columns() const;

  // theta reverses the order of the alphabet: an involution on letters,
  // the image set on columns, and the reversed theta-image on words (so it
  // is an anti-automorphism of the free monoid).
  Letter theta(Letter a) const { return Letter(n_ + 1 - a.index()); }
  Column theta(Column g) const;
  Word theta(const Word& w) const;

  char letter_char(Letter a) const { return static_cast<char>('a' + a.index() - 1); }
  Letter parse_letter(char c) const;
  Word parse_word(std::string_view s) const;
  std::string format(const Word& w) const;
  std::string format(Letter a) const { return std::string(1, letter_char(a)); }
  // decreasing-word name of a column; the empty column prints as epsilon
  std::string column_name(Column g) const;

 private:
  int n_;
};

}  // namespace stylic
