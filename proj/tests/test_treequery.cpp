#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mstsens/graph.hpp"
#include "mstsens/treequery.hpp"

using namespace mstsens;

namespace {

// path on a small tree by parent walking
int naive_path_max(const graph& g, const rooted_tree& t, int u, int v) {
  auto lift = [&](int x, int d) {
    int best = -1;
    while (t.depth[std::size_t(x)] > d) {
      int e = t.parent_edge[std::size_t(x)];
      if (best == -1 || g.edges[std::size_t(e)].w > g.edges[std::size_t(best)].w ||
          (g.edges[std::size_t(e)].w == g.edges[std::size_t(best)].w && e > best))
        best = e;
      x = t.parent[std::size_t(x)];
    }
    return std::pair<int, int>{x, best};
  };
  auto take = [&](int a, int b) {
    if (a == -1) return b;
    if (b == -1) return a;
    if (g.edges[std::size_t(a)].w != g.edges[std::size_t(b)].w)
      return g.edges[std::size_t(a)].w > g.edges[std::size_t(b)].w ? a : b;
    return std::max(a, b);
  };
  int d = std::min(t.depth[std::size_t(u)], t.depth[std::size_t(v)]);
  auto [ux, ue] = lift(u, d);
  auto [vx, ve] = lift(v, d);
  int best = take(ue, ve);
  while (ux != vx) {
    best = take(best, t.parent_edge[std::size_t(ux)]);
    best = take(best, t.parent_edge[std::size_t(vx)]);
    ux = t.parent[std::size_t(ux)];
    vx = t.parent[std::size_t(vx)];
  }
  return best;
}

int naive_lca(const rooted_tree& t, int u, int v) {
  while (u != v) {
    if (t.depth[std::size_t(u)] < t.depth[std::size_t(v)]) std::swap(u, v);
    u = t.parent[std::size_t(u)];
  }
  return u;
}

graph path_graph(int n) {
  graph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, i + 1});
  return g;
}

}  // namespace

TEST_CASE("rooted tree over a path") {
  graph g = path_graph(5);
  std::vector<int> ids{0, 1, 2, 3};
  rooted_tree t = build_rooted_tree(g, ids, 0);
  CHECK(t.parent == std::vector<int>{-1, 0, 1, 2, 3});
  CHECK(t.depth == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(t.pre == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(t.order == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(t.subtree_end == std::vector<int>{4, 4, 4, 4, 4});
  CHECK(t.is_ancestor(0, 4));
  CHECK(t.is_ancestor(2, 2));
  CHECK(!t.is_ancestor(3, 1));

  rooted_tree mid = build_rooted_tree(g, ids, 2);
  CHECK(mid.depth == std::vector<int>{2, 1, 0, 1, 2});
  CHECK(mid.parent[0] == 1);
  CHECK(mid.parent[4] == 3);
}

TEST_CASE("children are visited in edge-id order") {
  graph g;
  g.n = 4;
  g.edges = {{0, 2, 9}, {0, 1, 9}, {0, 3, 9}};
  rooted_tree t = build_rooted_tree(g, {0, 1, 2}, 0);
  CHECK(t.children[0] == std::vector<int>{2, 1, 3});
  CHECK(t.order == std::vector<int>{0, 2, 1, 3});
  CHECK(t.subtree_end == std::vector<int>{3, 1, 2, 3});
}

TEST_CASE("rooted tree rejects non-spanning edge sets") {
  graph g = path_graph(4);
  g.edges.push_back({0, 3, 10});
  CHECK_THROWS_AS(build_rooted_tree(g, {0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_rooted_tree(g, {0, 1, 2, 3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_rooted_tree(g, {0, 1, 2}, 5), std::invalid_argument);
  graph h;
  h.n = 4;
  h.edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};  // cycle, misses vertex 3
  CHECK_THROWS_AS(build_rooted_tree(h, {0, 1, 2}, 0), std::invalid_argument);
}

TEST_CASE("lca on random trees matches parent walking") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + int(rng() % 60);
    graph g = gen_random_graph(n, n - 1, rng(), 30);
    rooted_tree t = build_rooted_tree(
        g, [&] { std::vector<int> ids(std::size_t(n - 1)); std::iota(ids.begin(), ids.end(), 0); return ids; }(),
        int(rng() % n));
    lca_index idx(t);
    for (int q = 0; q < 200; ++q) {
      int u = int(rng() % n), v = int(rng() % n);
      CHECK(idx.lca(u, v) == naive_lca(t, u, v));
    }
  }
}

TEST_CASE("path max on random trees matches parent walking") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + int(rng() % 60);
    graph g = gen_random_graph(n, n - 1, rng(), 8);  // small range forces ties
    std::vector<int> ids(std::size_t(n - 1));
    std::iota(ids.begin(), ids.end(), 0);
    rooted_tree t = build_rooted_tree(g, ids, 0);
    path_max_index pm(g, t);
    for (int q = 0; q < 200; ++q) {
      int u = int(rng() % n), v = int(rng() % n);
      if (u == v) {
        CHECK_THROWS_AS(pm.path_max_edge(u, v), std::invalid_argument);
        continue;
      }
      CHECK(pm.path_max_edge(u, v) == naive_path_max(g, t, u, v));
    }
  }
}

TEST_CASE("path max on a path graph is the heaviest edge in range") {
  graph g = path_graph(9);  // edge i has weight i+1
  std::vector<int> ids(8);
  std::iota(ids.begin(), ids.end(), 0);
  rooted_tree t = build_rooted_tree(g, ids, 0);
  path_max_index pm(g, t);
  CHECK(pm.path_max_edge(2, 7) == 6);
  CHECK(pm.path_max_edge(7, 2) == 6);
  CHECK(pm.path_max_edge(0, 1) == 0);
  CHECK(pm.path_max_edge(8, 0) == 7);
}
