#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mstsens/graph.hpp"

using namespace mstsens;

namespace {

graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

const char* triangle_text =
    "c a triangle\n"
    "p edge 3 3\n"
    "e 1 2 1\n"
    "e 2 3 2\n"
    "e 1 3 5\n";

std::int64_t tree_weight(const graph& g, const std::vector<int>& ids) {
  std::int64_t w = 0;
  for (int id : ids) w += g.edges[std::size_t(id)].w;
  return w;
}

// all spanning trees by brute force (choose n-1 edges, check spanning)
std::int64_t brute_mst_weight(const graph& g) {
  int m = g.m(), n = g.n;
  std::int64_t best = -1;
  std::vector<int> pick;
  auto connected = [&](const std::vector<int>& ids) {
    std::vector<int> uf(std::size_t(n), 0);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[std::size_t(x)] != x) x = uf[std::size_t(x)] = uf[std::size_t(uf[std::size_t(x)])];
      return x;
    };
    int comps = n;
    for (int id : ids) {
      int a = find(g.edges[std::size_t(id)].u), b = find(g.edges[std::size_t(id)].v);
      if (a != b) uf[std::size_t(a)] = b, --comps;
    }
    return comps == 1;
  };
  std::vector<bool> sel(std::size_t(m), false);
  std::fill(sel.begin(), sel.begin() + (n - 1), true);
  std::sort(sel.begin(), sel.end());
  do {
    pick.clear();
    for (int i = 0; i < m; ++i)
      if (sel[std::size_t(i)]) pick.push_back(i);
    if (!connected(pick)) continue;
    std::int64_t w = tree_weight(g, pick);
    if (best < 0 || w < best) best = w;
  } while (std::next_permutation(sel.begin(), sel.end()));
  return best;
}

}  // namespace

TEST_CASE("parse a simple graph") {
  graph g = parse(triangle_text);
  CHECK(g.n == 3);
  CHECK(g.m() == 3);
  CHECK(g.edges[0] == edge{0, 1, 1});
  CHECK(g.edges[1] == edge{1, 2, 2});
  CHECK(g.edges[2] == edge{0, 2, 5});
}

TEST_CASE("parse tolerates comments and blank lines") {
  graph g = parse("c x\n\np edge 2 1\nc mid\ne 1 2 7\n\nc end\n");
  CHECK(g.n == 2);
  CHECK(g.m() == 1);
  CHECK(g.edges[0] == edge{0, 1, 7});
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse(""), std::invalid_argument);
  CHECK_THROWS_AS(parse("p edge 2 1\n"), std::invalid_argument);  // missing edge
  CHECK_THROWS_AS(parse("e 1 2 3\n"), std::invalid_argument);     // edge before header
  CHECK_THROWS_AS(parse("p edge 2 1\np edge 2 1\ne 1 2 3\n"),
                  std::invalid_argument);  // duplicate header
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1 3 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("p edge 2 1\ne 0 2 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1 2 4 9\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("p edge 2 2\ne 1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1 2 3\ne 2 1 4\ne 1 2 9\n"),
                  std::invalid_argument);  // more edges than declared
  CHECK_THROWS_AS(parse("q edge 2 1\ne 1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("p edge 4 2\ne 1 2 1\ne 3 4 1\n"),
                  std::invalid_argument);  // disconnected
}

TEST_CASE("parse normalizes as it loads") {
  graph g = parse(
      "p edge 3 5\n"
      "e 1 2 5\n"
      "e 2 2 4\n"
      "e 1 2 3\n"
      "e 2 3 2\n"
      "e 2 1 3\n");
  CHECK(g.m() == 2);
  CHECK(g.edges[0] == edge{0, 1, 3});
  CHECK(g.edges[1] == edge{1, 2, 2});
}

TEST_CASE("serialize-parse round trip") {
  graph g = parse(triangle_text);
  std::ostringstream out;
  write_graph(g, out);
  graph h = parse(out.str());
  CHECK(g.n == h.n);
  CHECK(g.edges == h.edges);
}

TEST_CASE("normalization drops self-loops and keeps lightest parallel") {
  graph g;
  g.n = 3;
  g.edges = {{0, 1, 5}, {1, 1, 4}, {0, 1, 3}, {1, 2, 2}, {1, 0, 3}};
  normalize_graph(g);
  CHECK(g.m() == 2);
  CHECK(g.edges[0] == edge{0, 1, 3});  // first lightest (1,2) survives
  CHECK(g.edges[1] == edge{1, 2, 2});
}

TEST_CASE("connectivity check") {
  CHECK(is_connected(parse(triangle_text)));
  graph d;
  d.n = 4;
  d.edges = {{0, 1, 1}, {2, 3, 1}};
  CHECK(!is_connected(d));
  graph single;
  single.n = 1;
  CHECK(is_connected(single));
}

TEST_CASE("mst of the triangle") {
  graph g = parse(triangle_text);
  auto t = minimum_spanning_tree(g);
  std::sort(t.begin(), t.end());
  CHECK(t == std::vector<int>{0, 1});
  CHECK(tree_weight(g, t) == 3);
}

TEST_CASE("mst of a tree is the tree; forest on disconnected input") {
  graph g = parse("p edge 4 3\ne 1 2 9\ne 2 3 1\ne 2 4 4\n");
  auto t = minimum_spanning_tree(g);
  CHECK(t.size() == 3);

  graph d;
  d.n = 4;
  d.edges = {{0, 1, 1}, {2, 3, 1}};
  CHECK_THROWS_AS(minimum_spanning_tree(d), std::invalid_argument);
  auto f = minimum_spanning_forest(d);
  CHECK(f.size() == 2);
}

TEST_CASE("mst ties broken by edge id") {
  graph g = parse("p edge 3 3\ne 1 2 4\ne 2 3 4\ne 1 3 4\n");
  auto t = minimum_spanning_tree(g);
  std::sort(t.begin(), t.end());
  CHECK(t == std::vector<int>{0, 1});
}

TEST_CASE("mst weight agrees with exhaustive search") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + int(rng() % 4);
    std::int64_t mmax = std::int64_t(n) * (n - 1) / 2;
    std::int64_t m = std::min(mmax, (n - 1) + std::int64_t(rng() % 6));
    graph g = gen_random_graph(n, m, rng(), 12);
    auto t = minimum_spanning_tree(g);
    CHECK(int(t.size()) == n - 1);
    CHECK(tree_weight(g, t) == brute_mst_weight(g));
  }
}

TEST_CASE("dijkstra on the triangle") {
  graph g = parse(triangle_text);
  auto r = dijkstra(g, 0);
  CHECK(r.dist == std::vector<std::int64_t>{0, 1, 3});
  CHECK(r.parent == std::vector<int>{-1, 0, 1});
  CHECK(r.parent_edge == std::vector<int>{-1, 0, 1});
}

TEST_CASE("dijkstra breaks distance ties by edge id") {
  // two equal-length routes to vertex 3: via edge chain (0) + (2) or (1) + (3)
  graph g = parse(
      "p edge 4 4\n"
      "e 1 2 1\n"
      "e 1 3 1\n"
      "e 2 4 1\n"
      "e 3 4 1\n");
  auto r = dijkstra(g, 0);
  CHECK(r.dist[3] == 2);
  CHECK(r.parent_edge[3] == 2);
  CHECK(r.parent[3] == 1);
}

TEST_CASE("dijkstra rejects bad input") {
  graph g = parse(triangle_text);
  CHECK_THROWS_AS(dijkstra(g, 3), std::invalid_argument);
  CHECK_THROWS_AS(dijkstra(g, -1), std::invalid_argument);
  graph z = parse("p edge 2 1\ne 1 2 0\n");
  CHECK_THROWS_AS(dijkstra(z, 0), std::invalid_argument);
  graph d;
  d.n = 3;
  d.edges = {{0, 1, 1}};
  CHECK_THROWS_AS(dijkstra(d, 0), std::invalid_argument);
}

TEST_CASE("dijkstra distances match a relaxation fixpoint") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + int(rng() % 30);
    std::int64_t mmax = std::int64_t(n) * (n - 1) / 2;
    std::int64_t m = (n - 1) + std::int64_t(rng() % (mmax - n + 2));
    graph g = gen_random_graph(n, m, rng(), 50);
    auto r = dijkstra(g, 0);
    // Bellman-Ford as oracle
    std::vector<std::int64_t> d(std::size_t(n), std::int64_t(1) << 60);
    d[0] = 0;
    for (int it = 0; it < n; ++it)
      for (const edge& e : g.edges) {
        d[std::size_t(e.v)] = std::min(d[std::size_t(e.v)], d[std::size_t(e.u)] + e.w);
        d[std::size_t(e.u)] = std::min(d[std::size_t(e.u)], d[std::size_t(e.v)] + e.w);
      }
    CHECK(r.dist == d);
    // tree edges realize the distances
    for (int v = 1; v < n; ++v) {
      const edge& e = g.edges[std::size_t(r.parent_edge[std::size_t(v)])];
      CHECK((e.u == v || e.v == v));
      int u = e.u == v ? e.v : e.u;
      CHECK(r.parent[std::size_t(v)] == u);
      CHECK(r.dist[std::size_t(v)] == r.dist[std::size_t(u)] + e.w);
    }
  }
}

TEST_CASE("generator produces valid deterministic graphs") {
  graph a = gen_random_graph(50, 120, 7, 100);
  graph b = gen_random_graph(50, 120, 7, 100);
  CHECK(a.edges == b.edges);
  CHECK(a.n == 50);
  CHECK(a.m() == 120);
  CHECK(is_connected(a));
  for (const edge& e : a.edges) {
    CHECK(e.u != e.v);
    CHECK(e.w >= 1);
    CHECK(e.w <= 100);
    CHECK(e.u >= 0);
    CHECK(e.v < 50);
  }
  // simple: no duplicate endpoint pairs
  std::vector<std::pair<int, int>> seen;
  for (const edge& e : a.edges)
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());

  graph c = gen_random_graph(50, 120, 8, 100);
  CHECK(a.edges != c.edges);

  CHECK_THROWS_AS(gen_random_graph(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_graph(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_graph(0, 0, 1), std::invalid_argument);
}
