#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "stylic/monoid.hpp"
#include "stylic/verify.hpp"
#include "test_util.hpp"

using namespace stylic;
using testutil::col;
using testutil::word;

namespace {

std::vector<Word> words_up_to(int n, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int a = 1; a <= n; ++a) {
        Word w = out[i];
        w.push_back(Letter(a));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

// distinct action tables over all words of length <= max_len, computed
// directly from the insertion fold (independent of the BFS closure)
std::size_t saturation_count(int n, std::size_t max_len) {
  Alphabet alpha(n);
  std::set<std::vector<std::uint32_t>> tables;
  for (const Word& w : words_up_to(n, max_len)) {
    std::vector<std::uint32_t> t;
    t.reserve(alpha.num_columns());
    for (Column g : alpha.columns()) t.push_back(left_act(w, g).bits());
    tables.insert(std::move(t));
  }
  return tables.size();
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Independent cardinality oracle for n = 2: the congruence generated by
// the Knuth and idempotent relations, closed over all words of length <= 6
// by union-find. Bounded-length closure can only under-merge, so a count
// that matches the action-table count pins the cardinality from both sides.
std::size_t rewrite_class_count_n2(std::size_t max_len) {
  const int n = 2;
  std::vector<Word> words = words_up_to(n, max_len);
  std::map<Word, int> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = int(i);
  Dsu dsu(words.size());

  auto unite_if_known = [&](const Word& u, const Word& v) {
    auto iu = index.find(u), iv = index.find(v);
    if (iu != index.end() && iv != index.end()) dsu.unite(iu->second, iv->second);
  };

  for (const Word& w : words) {
    // idempotent relation a^2 = a (the insertion direction follows by
    // symmetry of the union)
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] != w[i + 1]) continue;
      Word shorter = w;
      shorter.erase(shorter.begin() + std::ptrdiff_t(i));
      unite_if_known(w, shorter);
    }
    // two-letter Knuth relations: bab = bba and aba = baa for a < b
    for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
      Letter x = w[i], y = w[i + 1], z = w[i + 2];
      if (x != z) continue;
      Word v = w;
      if (y < x) {  // (b,a,b) -> (b,b,a)
        v[i + 1] = x;
        v[i + 2] = y;
      } else if (y > x) {  // (a,b,a) -> (b,a,a)
        v[i] = y;
        v[i + 1] = x;
        v[i + 2] = x;
      } else {
        continue;
      }
      unite_if_known(w, v);
    }
  }

  std::set<int> roots;
  for (std::size_t i = 0; i < words.size(); ++i) roots.insert(dsu.find(int(i)));
  return roots.size();
}

}  // namespace

TEST_CASE("cardinalities from independent oracles") {
  // n = 1: exhaustive closure on two columns gives {1, a}
  auto m1 = StylMonoid::enumerate(1);
  CHECK(m1.size() == 2);
  CHECK(saturation_count(1, 4) == 2);

  // n = 2: bounded rewriting with Knuth + idempotent relations
  auto m2 = StylMonoid::enumerate(2);
  CHECK(m2.size() == 5);
  CHECK(rewrite_class_count_n2(6) == 5);
  CHECK(saturation_count(2, 6) == 5);

  // n = 3, 4: word saturation (stable across the length bound) matches BFS
  auto m3 = StylMonoid::enumerate(3);
  CHECK(saturation_count(3, 7) == saturation_count(3, 8));
  CHECK(m3.size() == saturation_count(3, 8));

  auto m4 = StylMonoid::enumerate(4);
  CHECK(saturation_count(4, 8) == saturation_count(4, 9));
  CHECK(m4.size() == saturation_count(4, 9));
}

TEST_CASE("pinned regression sizes") {
  for (int n = 1; n <= 5; ++n) {
    auto m = StylMonoid::enumerate(n);
    auto pinned = pinned_monoid_size(n);
    REQUIRE(pinned.has_value());
    CHECK(m.size() == *pinned);
  }
}

TEST_CASE("element_of_word and multiplication") {
  Alphabet a2(2);
  auto m = StylMonoid::enumerate(2);
  CHECK(m.size() == 5);

  auto id = m.element_of_word({});
  CHECK(id == m.identity());
  CHECK(m.element_of_word(word(a2, "aa")) == m.element_of_word(word(a2, "a")));
  CHECK(m.element_of_word(word(a2, "bab")) == m.element_of_word(word(a2, "ba")));
  CHECK(m.element_of_word(word(a2, "ab")) != m.element_of_word(word(a2, "ba")));

  for (StylMonoid::ElementId x = 0; x < m.size(); ++x) {
    CHECK(m.multiply(m.identity(), x) == x);
    CHECK(m.multiply(x, m.identity()) == x);
  }
  auto ga = m.generator(Letter(1));
  CHECK(m.multiply(ga, ga) == ga);
  // composition matches the direct fold
  CHECK(m.multiply(ga, m.generator(Letter(2))) == m.element_of_word(word(a2, "ab")));

  CHECK_THROWS_AS(StylMonoid::enumerate(0), std::out_of_range);
  CHECK_THROWS_AS(StylMonoid::enumerate(17), std::out_of_range);
  CHECK_THROWS_AS(m.element_of_word(word(Alphabet(3), "c")), std::out_of_range);
}

TEST_CASE("rep words are shortlex and reproduce their element") {
  for (int n = 1; n <= 4; ++n) {
    auto m = StylMonoid::enumerate(n);
    CHECK(m.rep_word(m.identity()).empty());
    for (StylMonoid::ElementId x = 0; x < m.size(); ++x)
      CHECK(m.element_of_word(m.rep_word(x)) == x);
  }
  Alphabet a2(2);
  auto m = StylMonoid::enumerate(2);
  CHECK(a2.format(m.rep_word(m.element_of_word(word(a2, "bab")))) == "ba");
}

TEST_CASE("eta, lfix, rfix") {
  Alphabet a4(4);
  auto m = StylMonoid::enumerate(4);
  CHECK(m.eta(m.identity()) == Column());
  CHECK(m.eta(m.element_of_word(word(a4, "ba"))) == col(a4, "ba"));
  CHECK(m.eta(m.element_of_word(word(a4, "dbabac"))) == col(a4, "dba"));

  CHECK(m.lfix(m.identity()) == Column());
  CHECK(m.lfix(m.generator(Letter(1))) == col(a4, "a"));
  CHECK(m.rfix(m.identity()) == Column());
  CHECK(m.rfix(m.generator(Letter(1))) == col(a4, "a"));

  for (StylMonoid::ElementId x = 0; x < m.size(); ++x) {
    CHECK(m.lfix(x) == m.eta(x));
    Column direct;
    for (int a = 1; a <= 4; ++a)
      if (m.multiply(x, m.generator(Letter(a))) == x) direct = direct.with(Letter(a));
    CHECK(m.rfix(x) == direct);
  }
}

TEST_CASE("theta on the monoid") {
  Alphabet a2(2);
  auto m = StylMonoid::enumerate(2);
  CHECK(m.theta_element(m.identity()) == m.identity());
  CHECK(m.theta_element(m.generator(Letter(1))) == m.generator(Letter(2)));
  auto ab = m.element_of_word(word(a2, "ab"));
  CHECK(m.theta_element(ab) == ab);

  auto m3 = StylMonoid::enumerate(3);
  for (StylMonoid::ElementId x = 0; x < m3.size(); ++x) {
    CHECK(m3.theta_element(m3.theta_element(x)) == x);
    for (StylMonoid::ElementId y = 0; y < m3.size(); ++y)
      CHECK(m3.theta_element(m3.multiply(x, y)) ==
            m3.multiply(m3.theta_element(y), m3.theta_element(x)));
  }
}

TEST_CASE("J-order") {
  Alphabet a2(2);
  auto m = StylMonoid::enumerate(2);
  auto a = m.generator(Letter(1));
  auto ab = m.element_of_word(word(a2, "ab"));

  for (StylMonoid::ElementId x = 0; x < m.size(); ++x) CHECK(m.j_leq(x, x));
  CHECK(m.j_leq(ab, a));
  CHECK(!m.j_leq(a, ab));
  CHECK(!m.j_leq(m.identity(), a));
  CHECK(m.j_leq(a, m.identity()));

  // antisymmetry (J-triviality) and the linear extension's consistency
  auto m4 = StylMonoid::enumerate(4);
  auto order = m4.j_linear_extension();
  std::vector<std::size_t> pos(m4.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (StylMonoid::ElementId x = 0; x < m4.size(); ++x)
    for (StylMonoid::ElementId y = 0; y < m4.size(); ++y) {
      if (x == y) continue;
      if (m4.j_leq(x, y)) {
        CHECK(!m4.j_leq(y, x));
        CHECK(pos[x] < pos[y]);
      }
    }
}

TEST_CASE("multiplication agrees with and without memoization") {
  auto fast = StylMonoid::enumerate(3, {.memoize_mult = true});
  auto slow = StylMonoid::enumerate(3, {.memoize_mult = false});
  CHECK(fast.mult_memoized());
  CHECK(!slow.mult_memoized());
  CHECK(fast.size() == slow.size());
  for (StylMonoid::ElementId x = 0; x < fast.size(); ++x)
    for (StylMonoid::ElementId y = 0; y < fast.size(); ++y)
      CHECK(fast.multiply(x, y) == slow.multiply(x, y));
}

TEST_CASE("monoid JSON export") {
  auto m = StylMonoid::enumerate(2);
  nlohmann::json doc = m.to_json();
  CHECK(doc["n"] == 2);
  CHECK(doc["size"] == 5);
  REQUIRE(doc["elements"].size() == 5);
  CHECK(doc["elements"][0]["rep_word"] == "");
  CHECK(doc["elements"][0]["table"].size() == 4);
  // identity table maps every column to itself
  for (std::size_t g = 0; g < 4; ++g) CHECK(doc["elements"][0]["table"][g] == g);
}
