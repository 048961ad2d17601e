#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "stylic/quiver.hpp"
#include "stylic/verify.hpp"
#include "test_util.hpp"

using namespace stylic;
using testutil::col;
using testutil::word;

namespace {

std::set<std::tuple<std::uint32_t, int, std::uint32_t>> edge_set(const std::vector<QuiverEdge>& es) {
  std::set<std::tuple<std::uint32_t, int, std::uint32_t>> out;
  for (const QuiverEdge& e : es) out.emplace(e.src.bits(), e.label.index(), e.dst.bits());
  return out;
}

}  // namespace

TEST_CASE("quiver edge sets match the known small alphabets") {
  // n = 2: the single edge a -> b labelled b
  Quiver q2 = Quiver::plain(2);
  REQUIRE(q2.edges().size() == 1);
  Alphabet a2(2);
  CHECK(q2.edges()[0] == QuiverEdge{col(a2, "a"), Letter(2), col(a2, "b")});
  CHECK(q2.vertices().size() == 4);

  for (int n = 2; n <= 4; ++n) {
    Alphabet alpha(n);
    CHECK(edge_set(Quiver::plain(n).edges()) == edge_set(figure_edges(alpha)));
  }

  // spot checks from the four-letter panel
  Alphabet a4(4);
  auto e4 = edge_set(Quiver::plain(4).edges());
  CHECK(e4.count({col(a4, "da").bits(), 2, col(a4, "db").bits()}) == 1);
  CHECK(e4.count({col(a4, "da").bits(), 3, col(a4, "dc").bits()}) == 1);
  CHECK(e4.count({col(a4, "cba").bits(), 4, col(a4, "dba").bits()}) == 1);
  CHECK(e4.size() == 17);
}

TEST_CASE("extended quiver") {
  Quiver q1 = Quiver::extended(1);
  REQUIRE(q1.edges().size() == 1);
  CHECK(q1.edges()[0].src == q1.edges()[0].dst);

  Alphabet a2(2);
  auto e2 = edge_set(Quiver::extended(2).edges());
  CHECK(e2.size() == 5);
  CHECK(e2.count({col(a2, "a").bits(), 1, col(a2, "a").bits()}) == 1);
  CHECK(e2.count({col(a2, "b").bits(), 2, col(a2, "b").bits()}) == 1);
  CHECK(e2.count({col(a2, "ba").bits(), 1, col(a2, "ba").bits()}) == 1);
  CHECK(e2.count({col(a2, "ba").bits(), 2, col(a2, "ba").bits()}) == 1);
  CHECK(e2.count({col(a2, "a").bits(), 2, col(a2, "b").bits()}) == 1);

  // deterministic automaton: at most one edge per (vertex, label); a letter
  // c leaves gamma iff c >= min(gamma)
  for (int n = 1; n <= 4; ++n) {
    Quiver ext = Quiver::extended(n);
    std::set<std::pair<std::uint32_t, int>> seen;
    for (const QuiverEdge& e : ext.edges()) CHECK(seen.emplace(e.src.bits(), e.label.index()).second);
    for (Column g : ext.alphabet().columns())
      for (int i = 1; i <= n; ++i)
        CHECK(ext.step(g, Letter(i)).has_value() == (!g.empty() && g.min_letter() <= Letter(i)));
  }
}

TEST_CASE("path enumeration") {
  CHECK(enumerate_paths(Quiver::plain(1)).size() == 2);
  auto p2 = enumerate_paths(Quiver::plain(2));
  CHECK(p2.size() == 5);
  CHECK(std::count_if(p2.begin(), p2.end(), [](const Path& p) { return p.length() == 0; }) == 4);

  // 8 empty + 5 single edges + 2 composable pairs
  auto p3 = enumerate_paths(Quiver::plain(3));
  CHECK(p3.size() == 15);

  auto p4 = enumerate_paths(Quiver::plain(4));
  CHECK(p4.size() == 58);
  std::size_t longest = 0;
  for (const Path& p : p4) longest = std::max(longest, p.length());
  // ba ->c ca ->b cb ->d db ->c dc is a maximal path
  CHECK(longest == 4);
  Alphabet a4(4);
  CHECK(Quiver::plain(4).has_path(col(a4, "ba"), word(a4, "cbdc")));

  // length-then-lex order, and cached endpoints are consistent
  for (std::size_t i = 0; i + 1 < p4.size(); ++i) {
    const Path &a = p4[i], &b = p4[i + 1];
    CHECK(std::tuple(a.length(), a.start.bits(), a.labels) <=
          std::tuple(b.length(), b.start.bits(), b.labels));
  }
  for (const Path& p : p4) CHECK(p.end == right_act_word(p.start, p.labels));

  CHECK_THROWS_AS(enumerate_paths(Quiver::extended(2)), std::invalid_argument);
}

TEST_CASE("loops removal") {
  Alphabet a2(2);
  CHECK(loops_removal(col(a2, "ba"), {}).empty());
  // both letters of ab are loop steps at {a,b}
  CHECK(loops_removal(col(a2, "ba"), word(a2, "ab")).empty());
  // first b is frank from {a}, the second is a loop at {b}
  CHECK(a2.format(loops_removal(col(a2, "a"), word(a2, "bb"))) == "b");

  CHECK_THROWS_AS(loops_removal(col(a2, "b"), word(a2, "a")), std::invalid_argument);
  CHECK_THROWS_AS(loops_removal(Column(), word(a2, "a")), std::invalid_argument);

  // postconditions on random extended-quiver walks
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n) {
    Alphabet alpha(n);
    auto m = StylMonoid::enumerate(n);
    Quiver plain = Quiver::plain(n), ext = Quiver::extended(n);
    for (int iter = 0; iter < 500; ++iter) {
      Column g = Column::from_bits(std::uint32_t(rng() & (alpha.num_columns() - 1)));
      Word w;
      Column cur = g;
      for (std::size_t steps = rng() % 7; w.size() < steps && !cur.empty();) {
        int lo = cur.min_letter().index();
        Letter c(lo + int(rng() % std::uint64_t(n - lo + 1)));
        w.push_back(c);
        cur = *ext.step(cur, c);
      }
      Word wp = loops_removal(g, w);
      CHECK(plain.has_path(g, wp));
      CHECK(right_act_word(g, wp) == right_act_word(g, w));
      Word gw = g.as_word(), gwp = g.as_word();
      gw.insert(gw.end(), w.begin(), w.end());
      gwp.insert(gwp.end(), wp.begin(), wp.end());
      CHECK(m.element_of_word(gw) == m.element_of_word(gwp));
    }
  }
}

TEST_CASE("phi on paths") {
  auto m = StylMonoid::enumerate(2);
  IdempotentSystem sys(m);
  Alphabet a2(2);

  // empty path maps to its idempotent
  for (Column g : a2.columns())
    CHECK(phi(m, sys, Path{g, {}, g}) == sys.at(g));

  // the single edge: e_a * mu(b)
  Path edge{col(a2, "a"), word(a2, "b"), col(a2, "b")};
  CHECK(phi(m, sys, edge) ==
        sys.at(col(a2, "a")) * AlgebraElement::of(m, m.generator(Letter(2))));

  // image theorem and the edge identities, n <= 3 here (n = 4 in the suite)
  for (int n = 1; n <= 3; ++n) {
    auto mn = StylMonoid::enumerate(n);
    IdempotentSystem sysn(mn);
    Quiver q = Quiver::plain(n);
    for (const Path& p : enumerate_paths(q))
      CHECK(phi(mn, sysn, p) ==
            sysn.at(p.start) * AlgebraElement::of(mn, mn.element_of_word(p.labels)));
    for (const QuiverEdge& e : q.edges()) {
      Letter b = *right_act(e.src, e.label).bumped;
      AlgebraElement gb = AlgebraElement::of(mn, mn.generator(b));
      AlgebraElement gc = AlgebraElement::of(mn, mn.generator(e.label));
      CHECK(gb * sysn.at(e.src) * gc == gb * gc * sysn.at(e.dst));
      CHECK(sysn.at(e.src) * gc * sysn.at(e.dst) == sysn.at(e.src) * gc);
    }
  }
}

TEST_CASE("phi rank and kernel") {
  std::size_t expected_rank[] = {0, 2, 5, 15, 52};
  for (int n = 1; n <= 4; ++n) {
    auto m = StylMonoid::enumerate(n);
    IdempotentSystem sys(m);
    Quiver q = Quiver::plain(n);
    CHECK(phi_rank(m, sys, q) == expected_rank[n]);
    CHECK(phi_rank(m, sys, q) == m.size());

    KernelSpanReport rep = kernel_span_check(m, sys, q);
    CHECK(rep.pass());
    CHECK(rep.relations_in_kernel);
    CHECK(rep.endpoints_consistent);
    CHECK(rep.kernel_dim == rep.path_count - m.size());
    CHECK(rep.relation_span_dim == rep.kernel_dim);
  }
  // n = 2 and 3 have as many paths as elements, so the kernel vanishes
  auto m2 = StylMonoid::enumerate(2);
  IdempotentSystem sys2(m2);
  CHECK(kernel_span_check(m2, sys2, Quiver::plain(2)).kernel_dim == 0);
  auto m3 = StylMonoid::enumerate(3);
  IdempotentSystem sys3(m3);
  CHECK(kernel_span_check(m3, sys3, Quiver::plain(3)).kernel_dim == 0);
  // n = 4: 58 paths against 52 elements
  auto m4 = StylMonoid::enumerate(4);
  IdempotentSystem sys4(m4);
  CHECK(kernel_span_check(m4, sys4, Quiver::plain(4)).kernel_dim == 6);
}

TEST_CASE("admissibility") {
  for (int n = 1; n <= 4; ++n) {
    auto m = StylMonoid::enumerate(n);
    IdempotentSystem sys(m);
    AdmissibilityReport rep = admissibility_check(m, sys, Quiver::plain(n));
    CHECK(rep.acyclic);
    CHECK(rep.kernel_in_arrow_ideal_squared);
    CHECK(rep.pass());
    CHECK(rep.nilpotency_exponent == rep.longest_path + 1);
  }
  auto m4 = StylMonoid::enumerate(4);
  IdempotentSystem sys4(m4);
  CHECK(admissibility_check(m4, sys4, Quiver::plain(4)).longest_path == 4);
}

TEST_CASE("complement word") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 4; ++n) {
    Alphabet alpha(n);
    auto m = StylMonoid::enumerate(n);
    CHECK(complement_word(alpha, col(alpha, "a"), {}).empty());
    for (int iter = 0; iter < 800; ++iter) {
      Column g = Column::from_bits(std::uint32_t(rng() & (alpha.num_columns() - 1)));
      Word w;
      for (std::size_t len = rng() % 7; w.size() < len;)
        w.push_back(Letter(int(rng() % std::uint64_t(n)) + 1));
      Word u = complement_word(alpha, g, w);
      Word lhs = g.as_word();
      lhs.insert(lhs.end(), w.begin(), w.end());
      Word rhs = u;
      Word end = right_act_word(g, w).as_word();
      rhs.insert(rhs.end(), end.begin(), end.end());
      CHECK(m.element_of_word(lhs) == m.element_of_word(rhs));
    }
  }
}

TEST_CASE("find_path_word") {
  auto m = StylMonoid::enumerate(3);
  // the identity is reached by the empty word
  CHECK(find_path_word(m, Column(), m.identity(), 6).empty());
  // an unreachable target throws
  CHECK_THROWS_AS(find_path_word(m, Column(), m.generator(Letter(1)), 6), std::runtime_error);
}

TEST_CASE("dot and json export") {
  Quiver q = Quiver::plain(3);
  std::string dot = q.to_dot();
  CHECK(dot.find("digraph Q {") == 0);
  CHECK(dot.find("\"ba\" -> \"ca\" [label=\"c\"];") != std::string::npos);
  CHECK(dot.find("\"ε\";") != std::string::npos);

  nlohmann::json doc = q.to_json();
  CHECK(doc["n"] == 3);
  CHECK(doc["extended"] == false);
  CHECK(doc["vertices"].size() == 8);
  CHECK(doc["edges"].size() == 5);
  nlohmann::json ext = Quiver::extended(3).to_json();
  CHECK(ext["extended"] == true);
}
