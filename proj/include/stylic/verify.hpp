#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stylic/cartan.hpp"
#include "stylic/quiver.hpp"

namespace stylic {

struct CheckResult {
  std::string group;
  std::string name;
  bool pass = false;
  std::string detail;  // case counts, or the first counterexample
};

struct VerifyOptions {
  int n = 2;
  std::uint64_t seed = 20220614;
  std::size_t samples = 10000;     // per randomized lemma at large n
  int max_word_search_length = 0;  // 0 means 2n
  bool memoize_mult = true;
  unsigned threads = 1;            // 0 means hardware concurrency
};

// Precomputed context shared by the checks. Not movable: the idempotent
// system holds pointers into the monoid member.
struct VerifyContext {
  explicit VerifyContext(const VerifyOptions& opts);
  VerifyContext(const VerifyContext&) = delete;
  VerifyContext& operator=(const VerifyContext&) = delete;

  VerifyOptions opts;
  Alphabet alpha;
  StylMonoid monoid;
  IdempotentSystem idempotents;
  Quiver quiver;
  Quiver extended;
};

// The full invariant suite at the configured alphabet size. Checks indexed
// by letters or words run exhaustively up to n = 4 and on seeded random
// samples beyond; structural rank checks that scale with the path count
// run up to n = 4.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);
std::vector<CheckResult> run_verification(const VerifyContext& ctx);

// |Styl(A)| regression values pinned from the enumeration oracle
std::optional<std::uint64_t> pinned_monoid_size(int n);

// Fig. 2 edge triples (src column, label, dst column) for n = 2, 3, 4
std::vector<QuiverEdge> figure_edges(const Alphabet& alpha);

}  // namespace stylic
