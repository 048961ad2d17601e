#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "stylic/algebra.hpp"
#include "stylic/alphabet.hpp"
#include "stylic/core.hpp"

namespace stylic {

struct QuiverEdge {
  Column src;
  Letter label;
  Column dst;
  friend bool operator==(const QuiverEdge&, const QuiverEdge&) = default;
};

// The quiver on the set of columns. Plain form: one edge gamma --c-->
// gamma.c per frank action; source and target have equal height, the
// target has strictly larger weight, and the graph is acyclic. Extended
// form adds a loop (gamma, c, gamma) for every member c of gamma; an edge
// labelled c then leaves gamma iff c >= min(gamma), and the quiver is a
// deterministic automaton.
class Quiver {
 public:
  static Quiver plain(int n);
  static Quiver extended(int n);

  int n() const { return alpha_.size(); }
  const Alphabet& alphabet() const { return alpha_; }
  bool extended_form() const { return extended_; }
  const std::vector<QuiverEdge>& edges() const { return edges_; }
  std::vector<Column> vertices() const { return alpha_.columns(); }

  // deterministic step; nullopt when no edge labelled c leaves `from`
  std::optional<Column> step(Column from, Letter c) const;
  bool has_path(Column start, const Word& labels) const;

  std::string to_dot() const;
  nlohmann::json to_json() const;

 private:
  Quiver(int n, bool extended);

  Alphabet alpha_;
  bool extended_;
  std::vector<QuiverEdge> edges_;
};

// A path in the quiver: the start vertex and the label sequence (possibly
// empty; one empty path per vertex). Determinism per label makes this pair
// canonical; the end vertex is cached.
struct Path {
  Column start;
  Word labels;
  Column end;
  std::size_t length() const { return labels.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

// all paths of the (plain, acyclic) quiver in length-then-lex order,
// including the empty path at every vertex
std::vector<Path> enumerate_paths(const Quiver& q);

// Removes the loop steps of a Q'-path from gamma labelled w, producing the
// label of a plain-quiver path from gamma with the same action and with
// gamma w' stylically equivalent to gamma w. Throws std::invalid_argument
// when w does not label a Q'-path from gamma.
Word loops_removal(Column gamma, const Word& w);

// The quiver map on one path: e_g0 c1 e_g1 ... cl e_gl. Equals
// e_start * mu(labels) (the image theorem); the equality is a verified
// invariant, not assumed here.
AlgebraElement phi(const StylMonoid& m, const IdempotentSystem& sys, const Path& p);

// rows = phi images of the paths in the monoid basis
ExactMatrix phi_matrix(const StylMonoid& m, const IdempotentSystem& sys,
                       const std::vector<Path>& paths);

// rank over Q of { phi(p) : p path }; equals |Styl(A)| by surjectivity
std::size_t phi_rank(const StylMonoid& m, const IdempotentSystem& sys, const Quiver& q);

// Kernel-of-phi description check: the differences p - q of paths from a
// common start whose prefixed labels are stylically equivalent must span
// ker phi exactly.
struct KernelSpanReport {
  std::size_t path_count = 0;
  std::size_t phi_rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t relation_count = 0;
  std::size_t relation_span_dim = 0;
  bool relations_in_kernel = false;
  bool endpoints_consistent = false;  // equal-start equal-image paths share ends
  bool pass() const {
    return relations_in_kernel && endpoints_consistent && relation_span_dim == kernel_dim;
  }
};
KernelSpanReport kernel_span_check(const StylMonoid& m, const IdempotentSystem& sys,
                                   const Quiver& q);

// Admissibility of ker phi: the quiver is acyclic (so F^m = 0 for
// m = longest path + 1) and every kernel vector is supported on paths of
// length >= 2.
struct AdmissibilityReport {
  bool acyclic = false;
  std::size_t longest_path = 0;
  std::size_t nilpotency_exponent = 0;  // m with F^m = 0
  std::size_t kernel_dim = 0;
  bool kernel_in_arrow_ideal_squared = false;
  bool pass() const { return acyclic && kernel_in_arrow_ideal_squared; }
};
AdmissibilityReport admissibility_check(const StylMonoid& m, const IdempotentSystem& sys,
                                        const Quiver& q);

// A word u with mu(gamma-word ++ w) = mu(u ++ (gamma.w)-word), built from
// the P-symbol of theta(w) theta(gamma) by splitting off its first column.
Word complement_word(const Alphabet& alpha, Column gamma, const Word& w);

// Shortlex-first word w such that mu(gamma-word ++ w) = x and w labels a
// path in the extended quiver from gamma (every step keeps c >= min of the
// current column). Throws std::runtime_error when the bounded search is
// exhausted.
Word find_path_word(const StylMonoid& m, Column gamma, StylMonoid::ElementId x, int max_len);

}  // namespace stylic
