#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mstsens/graph.hpp"
#include "mstsens/reduction.hpp"
#include "mstsens/sensitivity.hpp"

using namespace mstsens;

namespace {

graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

constexpr std::int64_t INF = sens_inf;

}  // namespace

TEST_CASE("path thresholds from covering intervals") {
  CHECK(internal_path_sensitivity(4, {{0, 3, 9}}) ==
        std::vector<std::int64_t>{9, 9, 9});
  CHECK(internal_path_sensitivity(4, {{0, 1, 5}, {1, 3, 3}}) ==
        std::vector<std::int64_t>{5, 3, 3});
  CHECK(internal_path_sensitivity(4, {}) ==
        std::vector<std::int64_t>{INF, INF, INF});
  CHECK(internal_path_sensitivity(2, {{0, 1, 7}}) ==
        std::vector<std::int64_t>{7});
  // overlapping intervals take the minimum where both cover
  CHECK(internal_path_sensitivity(5, {{0, 2, 4}, {1, 4, 6}}) ==
        std::vector<std::int64_t>{4, 4, 6, 6});
}

TEST_CASE("path thresholds validate their input") {
  CHECK_THROWS_AS(internal_path_sensitivity(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(internal_path_sensitivity(4, {{2, 2, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(internal_path_sensitivity(4, {{3, 1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(internal_path_sensitivity(4, {{-1, 2, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(internal_path_sensitivity(4, {{0, 4, 1}}),
                  std::invalid_argument);
}

TEST_CASE("path thresholds match a direct sweep on random intervals") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 2 + int(rng() % 40);
    std::vector<std::tuple<int, int, std::int64_t>> spans;
    int cnt = int(rng() % 30);
    for (int i = 0; i < cnt; ++i) {
      int a = int(rng() % unsigned(k - 1));
      int b = a + 1 + int(rng() % unsigned(k - 1 - a));
      spans.push_back({a, b, std::int64_t(rng() % 100)});
    }
    auto got = internal_path_sensitivity(k, spans);
    for (int j = 0; j + 1 < k; ++j) {
      std::int64_t want = INF;
      for (auto [a, b, w] : spans)
        if (a <= j && j < b) want = std::min(want, w);
      CHECK(got[std::size_t(j)] == want);
    }
  }
}

TEST_CASE("contraction reproduces the triangle answer") {
  graph g = parse("p edge 3 3\ne 1 2 1\ne 2 3 2\ne 1 3 5\n");
  auto t = minimum_spanning_tree(g);
  CHECK(sensitivity_via_mst(g, t) == tree_edge_sensitivity(g, t));
  CHECK(sensitivity_via_mst(g, t) == std::vector<std::int64_t>{5, 5});
}

TEST_CASE("contraction rejects a non-minimum tree") {
  graph g = parse("p edge 3 3\ne 1 2 1\ne 2 3 2\ne 1 3 5\n");
  CHECK_THROWS_AS(sensitivity_via_mst(g, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sensitivity_via_mst(g, {0, 2}), std::invalid_argument);
}

TEST_CASE("a long bare path contracts away completely") {
  graph g;
  g.n = 100;
  for (int i = 0; i + 1 < g.n; ++i) g.edges.push_back({i, i + 1, i + 3});
  std::vector<int> t(99);
  for (int i = 0; i < 99; ++i) t[std::size_t(i)] = i;
  reduction_stats st;
  auto sens = sensitivity_via_mst(g, t, {}, &st);
  CHECK(sens == std::vector<std::int64_t>(99, INF));
  CHECK(st.level_n[0] == 100);
  CHECK(st.levels() == 1);  // no junctions at all: recursion stops at once
  CHECK(st.level_nontree == std::vector<int>{0});
}

TEST_CASE("contraction agrees with the direct sweep on random graphs") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + int(rng() % 250);
    std::int64_t mmax = std::int64_t(n) * (n - 1) / 2;
    std::int64_t m = std::min(mmax, (n - 1) + std::int64_t(rng() % (2 * n)));
    graph g = gen_random_graph(n, m, rng(), 200);
    auto t = minimum_spanning_tree(g);
    reduction_stats st;
    auto got = sensitivity_via_mst(g, t, {}, &st);
    auto want = tree_edge_sensitivity(g, t);
    REQUIRE(got == want);

    REQUIRE(st.levels() >= 1);
    CHECK(st.level_n[0] == n);
    // one non-tree count per sparsifying level; the last level sparsifies
    // too when it is not a base case (all junctions already gone)
    int sparsifying = st.levels() - (st.level_n.back() <= 32 ? 1 : 0);
    CHECK(int(st.level_nontree.size()) == sparsifying);
    for (int lvl = 0; lvl < sparsifying; ++lvl)
      // surviving non-tree edges form a forest of that level's instance
      CHECK(st.level_nontree[std::size_t(lvl)] <= st.level_n[std::size_t(lvl)] - 1);
    for (int lvl = 0; lvl + 1 < st.levels(); ++lvl)
      // condensing at least halves the instance
      CHECK(2 * st.level_n[std::size_t(lvl) + 1] < st.level_n[std::size_t(lvl)]);
  }
}

TEST_CASE("contraction uses the injected spanning-forest solver") {
  std::mt19937_64 rng(61);
  graph g = gen_random_graph(120, 360, rng(), 500);
  auto t = minimum_spanning_tree(g);
  int calls = 0;
  mst_solver counting = [&](const graph& h) {
    ++calls;
    return minimum_spanning_forest(h);
  };
  auto got = sensitivity_via_mst(g, t, counting);
  CHECK(calls >= 1);
  CHECK(got == tree_edge_sensitivity(g, t));
}

TEST_CASE("contraction handles m close to n") {
  // one extra edge: exactly one cycle's worth of finite sensitivities
  graph g;
  g.n = 64;
  for (int i = 0; i + 1 < g.n; ++i)
    g.edges.push_back({i, i + 1, 10 + (i % 3)});
  g.edges.push_back({10, 53, 1000});
  std::vector<int> t(63);
  for (int i = 0; i < 63; ++i) t[std::size_t(i)] = i;
  auto sens = sensitivity_via_mst(g, t);
  auto want = tree_edge_sensitivity(g, t);
  CHECK(sens == want);
  for (int i = 0; i < 63; ++i) {
    if (i >= 10 && i < 53)
      CHECK(sens[std::size_t(i)] == 1000);
    else
      CHECK(sens[std::size_t(i)] == INF);
  }
}
