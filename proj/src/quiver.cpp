#include "stylic/quiver.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "stylic/tableaux.hpp"

namespace stylic {

Quiver::Quiver(int n, bool extended) : alpha_(n), extended_(extended) {
  for (Column g : alpha_.columns()) {
    for (int i = 1; i <= n; ++i) {
      Letter c(i);
      if (is_frank(g, c)) {
        edges_.push_back({g, c, right_act(g, c).column});
      } else if (extended_ && g.contains(c)) {
        edges_.push_back({g, c, g});
      }
    }
  }
}

Quiver Quiver::plain(int n) { return Quiver(n, false); }
Quiver Quiver::extended(int n) { return Quiver(n, true); }

std::optional<Column> Quiver::step(Column from, Letter c) const {
  if (is_frank(from, c)) return right_act(from, c).column;
  if (extended_ && from.contains(c)) return from;
  return std::nullopt;
}

bool Quiver::has_path(Column start, const Word& labels) const {
  Column cur = start;
  for (Letter c : labels) {
    auto next = step(cur, c);
    if (!next) return false;
    cur = *next;
  }
  return true;
}

std::string Quiver::to_dot() const {
  std::string out = "digraph Q {\n";
  for (Column v : vertices()) out += "  \"" + alpha_.column_name(v) + "\";\n";
  for (const QuiverEdge& e : edges_)
    out += "  \"" + alpha_.column_name(e.src) + "\" -> \"" + alpha_.column_name(e.dst) +
           "\" [label=\"" + alpha_.format(e.label) + "\"];\n";
  out += "}\n";
  return out;
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (Column v : vertices()) vs.push_back(v.bits());
  nlohmann::json es = nlohmann::json::array();
  for (const QuiverEdge& e : edges_)
    es.push_back({{"src", e.src.bits()}, {"label", e.label.index()}, {"dst", e.dst.bits()}});
  return {{"n", n()}, {"extended", extended_}, {"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

std::vector<Path> enumerate_paths(const Quiver& q) {
  if (q.extended_form()) throw std::invalid_argument("path enumeration needs the plain quiver");
  std::vector<Path> all;
  std::vector<Path> level;
  for (Column v : q.vertices()) level.push_back({v, {}, v});

  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    std::vector<Path> next;
    for (const Path& p : level) {
      for (int i = 1; i <= q.n(); ++i) {
        Letter c(i);
        if (!is_frank(p.end, c)) continue;
        Path ext = p;
        ext.labels.push_back(c);
        ext.end = right_act(p.end, c).column;
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return all;
}

Word loops_removal(Column gamma, const Word& w) {
  // left-to-right unrolling of the recursion: a letter inside the current
  // column is a loop step and is dropped, otherwise it must be frank
  Word out;
  Column cur = gamma;
  for (Letter c : w) {
    if (cur.contains(c)) continue;
    if (!is_frank(cur, c))
      throw std::invalid_argument("word does not label an extended-quiver path from the column");
    out.push_back(c);
    cur = right_act(cur, c).column;
  }
  return out;
}

AlgebraElement phi(const StylMonoid& m, const IdempotentSystem& sys, const Path& p) {
  AlgebraElement out = sys.at(p.start);
  Column cur = p.start;
  for (Letter c : p.labels) {
    assert(is_frank(cur, c));
    cur = right_act(cur, c).column;
    out = out * AlgebraElement::of(m, m.generator(c)) * sys.at(cur);
  }
  return out;
}

ExactMatrix phi_matrix(const StylMonoid& m, const IdempotentSystem& sys,
                       const std::vector<Path>& paths) {
  ExactMatrix a(paths.size(), m.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    AlgebraElement image = phi(m, sys, paths[i]);
    for (const auto& [x, c] : image.terms()) a(i, x) = c;
  }
  return a;
}

std::size_t phi_rank(const StylMonoid& m, const IdempotentSystem& sys, const Quiver& q) {
  RowSpace space(m.size());
  for (const Path& p : enumerate_paths(q)) space.insert(phi(m, sys, p).to_dense());
  return space.rank();
}

KernelSpanReport kernel_span_check(const StylMonoid& m, const IdempotentSystem& sys,
                                   const Quiver& q) {
  const std::vector<Path> paths = enumerate_paths(q);
  KernelSpanReport report;
  report.path_count = paths.size();

  ExactMatrix a = phi_matrix(m, sys, paths);
  RowSpace image(m.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::vector<Rat> row(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) row[j] = a(i, j);
    image.insert(std::move(row));
  }
  report.phi_rank = image.rank();
  report.kernel_dim = paths.size() - report.phi_rank;

  // group paths from a common start by the element mu(gamma-word ++ labels);
  // differences within a group are the spanning relations
  std::map<std::pair<std::uint32_t, StylMonoid::ElementId>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    Word w = paths[i].start.as_word();
    w.insert(w.end(), paths[i].labels.begin(), paths[i].labels.end());
    groups[{paths[i].start.bits(), m.element_of_word(w)}].push_back(i);
  }

  report.relations_in_kernel = true;
  report.endpoints_consistent = true;
  RowSpace relation_span(paths.size());
  for (const auto& [key, members] : groups) {
    for (std::size_t k = 1; k < members.size(); ++k) {
      ++report.relation_count;
      const std::size_t p = members[k], p0 = members[0];
      if (paths[p].end != paths[p0].end) report.endpoints_consistent = false;
      // phi(p) == phi(p0), i.e. the difference maps to zero
      for (std::size_t j = 0; j < m.size(); ++j)
        if (a(p, j) != a(p0, j)) {
          report.relations_in_kernel = false;
          break;
        }
      std::vector<Rat> diff(paths.size());
      diff[p] = 1;
      diff[p0] = -1;
      relation_span.insert(std::move(diff));
    }
  }
  report.relation_span_dim = relation_span.rank();
  return report;
}

AdmissibilityReport admissibility_check(const StylMonoid& m, const IdempotentSystem& sys,
                                        const Quiver& q) {
  AdmissibilityReport report;

  // weight strictly increases along every edge, which rules out closed paths
  report.acyclic = std::all_of(q.edges().begin(), q.edges().end(), [](const QuiverEdge& e) {
    return column_weight(e.dst) > column_weight(e.src);
  });

  const std::vector<Path> paths = enumerate_paths(q);
  for (const Path& p : paths) report.longest_path = std::max(report.longest_path, p.length());
  report.nilpotency_exponent = report.longest_path + 1;

  ExactMatrix a = phi_matrix(m, sys, paths);
  auto kernel = a.transposed().kernel();  // vectors over paths
  report.kernel_dim = kernel.size();
  report.kernel_in_arrow_ideal_squared = true;
  for (const auto& v : kernel)
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (paths[i].length() <= 1 && v[i] != 0) report.kernel_in_arrow_ideal_squared = false;
  return report;
}

Word complement_word(const Alphabet& alpha, Column gamma, const Word& w) {
  // from the proof: read P(theta(w) theta(gamma)), whose first column is
  // theta(w).theta(gamma) = theta(gamma.w); the tail of its column-reading
  // word, pulled back through theta, complements gamma.w on the left
  Word rev = alpha.theta(w);
  Word gw = alpha.theta(gamma).as_word();
  rev.insert(rev.end(), gw.begin(), gw.end());
  Tableau t = p_symbol(rev);
  Word reading = column_reading_word(t);
  std::size_t first_height = t.empty() ? 0 : t.columns().front().height();
  assert(t.empty() ||
         t.columns().front() == alpha.theta(right_act_word(gamma, w)));
  Word tail(reading.begin() + static_cast<std::ptrdiff_t>(first_height), reading.end());
  return alpha.theta(tail);
}

Word find_path_word(const StylMonoid& m, Column gamma, StylMonoid::ElementId x, int max_len) {
  // BFS over monoid elements: by the cancellation lemma the column reached
  // from gamma is a function of the element, so (element, column) pairs
  // never conflict and the element alone is the search state. Letters are
  // tried in increasing order, so the first hit is shortlex-minimal among
  // words labelling extended-quiver paths from gamma.
  const StylMonoid::ElementId start =
      gamma.empty() ? m.identity() : m.element_of_word(gamma.as_word());

  struct State {
    StylMonoid::ElementId from;
    Letter via;
  };
  std::map<StylMonoid::ElementId, State> parent;
  std::map<StylMonoid::ElementId, Column> column_at;
  std::deque<std::pair<StylMonoid::ElementId, int>> queue;

  auto reconstruct = [&](StylMonoid::ElementId e) {
    Word out;
    while (e != start) {
      const State& s = parent.at(e);
      out.push_back(s.via);
      e = s.from;
    }
    std::reverse(out.begin(), out.end());
    return out;
  };

  if (start == x) return {};
  column_at[start] = gamma;
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_len) continue;
    Column col = column_at.at(cur);
    if (col.empty()) continue;  // no extended-quiver edge leaves the empty column
    for (int i = col.min_letter().index(); i <= m.n(); ++i) {
      Letter c(i);
      StylMonoid::ElementId next = m.multiply(cur, m.generator(c));
      if (column_at.count(next)) continue;
      column_at.emplace(next, right_act(col, c).column);
      parent.emplace(next, State{cur, c});
      if (next == x) return reconstruct(next);
      queue.emplace_back(next, depth + 1);
    }
  }
  throw std::runtime_error("no extended-quiver word reaches the element within the length bound");
}

}  // namespace stylic
