#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace mstsens {

struct edge {
  int u = 0;
  int v = 0;
  std::int64_t w = 0;
  bool operator==(const edge&) const = default;
};

struct graph {
  int n = 0;
  std::vector<edge> edges;
  int m() const { return int(edges.size()); }
};

// Weights are compared with the edge id as tiebreak, making every weight
// order strict.  a and b are edge ids.
inline bool edge_less(const graph& g, int a, int b) {
  const edge &ea = g.edges[a], &eb = g.edges[b];
  if (ea.w != eb.w) return ea.w < eb.w;
  return a < b;
}

// Text format: `c ...` comments, one `p edge <n> <m>` header, then m lines
// `e <u> <v> <w>` with 1-indexed endpoints.  The result is normalized (see
// below) and connected.  Throws std::invalid_argument on malformed or
// disconnected input.
graph parse_graph(std::istream& in);
void write_graph(const graph& g, std::ostream& out);

// Drops self-loops and collapses parallel edges keeping the lightest (ties
// by earlier id); surviving edges keep their input order and are reindexed
// 0..m-1.
void normalize_graph(graph& g);

bool is_connected(const graph& g);

// Edge ids of a minimum spanning forest, Kruskal by (w, id).  The *_tree
// form throws std::invalid_argument when g is disconnected.
std::vector<int> minimum_spanning_forest(const graph& g);
std::vector<int> minimum_spanning_tree(const graph& g);

struct sssp_result {
  std::vector<std::int64_t> dist;
  std::vector<int> parent;       // -1 at source
  std::vector<int> parent_edge;  // -1 at source
};

// Dijkstra from src; requires strictly positive weights and a connected
// graph (std::invalid_argument otherwise).  Among equal-length shortest
// paths the tree keeps the smallest parent edge id.
sssp_result dijkstra(const graph& g, int src);

// Connected random graph: random-attachment spanning tree plus rejection-
// sampled extra edges, weights uniform in [1, wmax].  Deterministic in the
// seed.  Requires n >= 1 and n-1 <= m <= n(n-1)/2.
graph gen_random_graph(int n, std::int64_t m, std::uint64_t seed,
                       std::int64_t wmax = 1000000000);

}  // namespace mstsens
