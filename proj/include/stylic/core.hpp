#pragma once

#include <optional>

#include "stylic/alphabet.hpp"

namespace stylic {

struct InsertResult {
  Column column;
  std::optional<Letter> bumped;
};

// Schensted column insertion of a into gamma. If a is larger than every
// member, it joins the column; otherwise it replaces the smallest member
// y >= a, which is bumped.
inline InsertResult left_insert(Letter a, Column gamma) {
  if (auto y = gamma.ceil(a)) return {gamma.without(*y).with(a), y};
  return {gamma.with(a), std::nullopt};
}

// Left action of a word: (uv).gamma = u.(v.gamma), so fold right to left.
inline Column left_act(const Word& w, Column gamma) {
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    gamma = left_insert(*it, gamma).column;
  return gamma;
}

// Right action of a letter: gamma.c adds c when c < min(gamma) (with
// min(empty) = +inf, so the empty column always grows), otherwise replaces
// the largest member b <= c, which is bumped. When c is already a member
// the result is gamma itself (b = c).
inline InsertResult right_act(Column gamma, Letter c) {
  if (auto b = gamma.floor(c)) return {gamma.without(*b).with(c), b};
  return {gamma.with(c), std::nullopt};
}

// fold of right_act left-to-right over w
inline Column right_act_word(Column gamma, const Word& w) {
  for (Letter c : w) gamma = right_act(gamma, c).column;
  return gamma;
}

// The right action of c on gamma is frank when c >= min(gamma) and c is not
// a member; frank actions preserve the column height. Never frank on the
// empty column (min(empty) = +inf).
inline bool is_frank(Column gamma, Letter c) {
  return !gamma.empty() && gamma.min_letter() <= c && !gamma.contains(c);
}

}  // namespace stylic
