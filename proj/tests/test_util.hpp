#pragma once

#include <string_view>

#include "stylic/alphabet.hpp"

namespace stylic::testutil {

inline Word word(const Alphabet& alpha, std::string_view s) { return alpha.parse_word(s); }

inline Column col(const Alphabet& alpha, std::string_view s) {
  Column g;
  for (char ch : s) g = g.with(alpha.parse_letter(ch));
  return g;
}

}  // namespace stylic::testutil
