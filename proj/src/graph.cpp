#include "mstsens/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mstsens {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::invalid_argument("graph parse error at line " +
                              std::to_string(line) + ": " + what);
}

struct union_find {
  std::vector<int> p, r;
  explicit union_find(int n) : p(n), r(n, 0) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (r[a] < r[b]) std::swap(a, b);
    p[b] = a;
    if (r[a] == r[b]) ++r[a];
    return true;
  }
};

std::vector<std::vector<std::pair<int, int>>> adjacency(const graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int e = 0; e < g.m(); ++e) {
    adj[g.edges[e].u].push_back({g.edges[e].v, e});
    adj[g.edges[e].v].push_back({g.edges[e].u, e});
  }
  return adj;
}

}  // namespace

graph parse_graph(std::istream& in) {
  graph g;
  bool have_header = false;
  long long want_m = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) parse_fail(lineno, "duplicate problem line");
      std::string kind;
      long long n = 0;
      if (!(ls >> kind >> n >> want_m) || kind != "edge")
        parse_fail(lineno, "expected `p edge <n> <m>`");
      if (n < 1 || want_m < 0) parse_fail(lineno, "bad sizes");
      g.n = int(n);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) parse_fail(lineno, "edge before problem line");
      long long u, v, w;
      if (!(ls >> u >> v >> w)) parse_fail(lineno, "expected `e <u> <v> <w>`");
      if (u < 1 || u > g.n || v < 1 || v > g.n)
        parse_fail(lineno, "endpoint out of range");
      g.edges.push_back({int(u - 1), int(v - 1), w});
    } else {
      parse_fail(lineno, "unknown line tag `" + tag + "`");
    }
    std::string rest;
    if (ls >> rest) parse_fail(lineno, "trailing tokens");
  }
  if (!have_header) parse_fail(lineno, "missing problem line");
  if (std::int64_t(g.edges.size()) != want_m)
    parse_fail(lineno, "edge count does not match header");
  normalize_graph(g);
  if (!is_connected(g)) parse_fail(lineno, "graph is not connected");
  return g;
}

void write_graph(const graph& g, std::ostream& out) {
  out << "p edge " << g.n << ' ' << g.m() << '\n';
  for (const edge& e : g.edges)
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

void normalize_graph(graph& g) {
  std::map<std::pair<int, int>, int> best;  // unordered endpoint pair -> id
  for (int e = 0; e < g.m(); ++e) {
    if (g.edges[e].u == g.edges[e].v) continue;
    auto key = std::minmax(g.edges[e].u, g.edges[e].v);
    auto [it, fresh] = best.emplace(key, e);
    if (!fresh && edge_less(g, e, it->second)) it->second = e;
  }
  std::vector<int> keep;
  keep.reserve(best.size());
  for (const auto& [key, e] : best) keep.push_back(e);
  std::sort(keep.begin(), keep.end());  // preserve input order
  std::vector<edge> edges;
  edges.reserve(keep.size());
  for (int e : keep) edges.push_back(g.edges[e]);
  g.edges = std::move(edges);
}

bool is_connected(const graph& g) {
  if (g.n <= 0) return false;
  union_find uf(g.n);
  int parts = g.n;
  for (const edge& e : g.edges)
    if (e.u != e.v && uf.unite(e.u, e.v)) --parts;
  return parts == 1;
}

std::vector<int> minimum_spanning_forest(const graph& g) {
  std::vector<int> ids(g.m());
  for (int e = 0; e < g.m(); ++e) ids[e] = e;
  std::sort(ids.begin(), ids.end(),
            [&](int a, int b) { return edge_less(g, a, b); });
  union_find uf(g.n);
  std::vector<int> out;
  for (int e : ids)
    if (g.edges[e].u != g.edges[e].v && uf.unite(g.edges[e].u, g.edges[e].v))
      out.push_back(e);
  return out;
}

std::vector<int> minimum_spanning_tree(const graph& g) {
  std::vector<int> forest = minimum_spanning_forest(g);
  if (int(forest.size()) != g.n - 1)
    throw std::invalid_argument("minimum_spanning_tree: graph not connected");
  return forest;
}

sssp_result dijkstra(const graph& g, int src) {
  if (src < 0 || src >= g.n)
    throw std::invalid_argument("dijkstra: source out of range");
  for (const edge& e : g.edges)
    if (e.w <= 0)
      throw std::invalid_argument("dijkstra: weights must be positive");
  auto adj = adjacency(g);
  sssp_result r;
  r.dist.assign(g.n, -1);
  r.parent.assign(g.n, -1);
  r.parent_edge.assign(g.n, -1);
  using pq_item = std::pair<std::int64_t, int>;
  std::priority_queue<pq_item, std::vector<pq_item>, std::greater<>> pq;
  r.dist[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != r.dist[u]) continue;
    for (auto [v, e] : adj[u]) {
      std::int64_t nd = d + g.edges[e].w;
      if (r.dist[v] == -1 || nd < r.dist[v]) {
        r.dist[v] = nd;
        r.parent[v] = u;
        r.parent_edge[v] = e;
        pq.push({nd, v});
      } else if (nd == r.dist[v] && e < r.parent_edge[v]) {
        r.parent[v] = u;  // deterministic tree among equal-length paths
        r.parent_edge[v] = e;
      }
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (r.dist[v] == -1)
      throw std::invalid_argument("dijkstra: graph not connected");
  return r;
}

graph gen_random_graph(int n, std::int64_t m, std::uint64_t seed,
                       std::int64_t wmax) {
  if (n < 1 || wmax < 1) throw std::invalid_argument("gen: bad parameters");
  std::int64_t max_m = std::int64_t(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m)
    throw std::invalid_argument("gen: edge count out of range");
  std::mt19937_64 rng(seed);
  graph g;
  g.n = n;
  std::unordered_set<std::uint64_t> used;
  used.reserve(std::size_t(2 * m));
  auto pack = [n](int u, int v) {
    auto [a, b] = std::minmax(u, v);
    return std::uint64_t(a) * std::uint64_t(n) + std::uint64_t(b);
  };
  auto add = [&](int u, int v) {
    used.insert(pack(u, v));
    g.edges.push_back({u, v, 1 + std::int64_t(rng() % std::uint64_t(wmax))});
  };
  for (int i = 1; i < n; ++i) add(int(rng() % std::uint64_t(i)), i);
  while (std::int64_t(g.edges.size()) < m) {
    int u = int(rng() % std::uint64_t(n));
    int v = int(rng() % std::uint64_t(n));
    if (u == v || used.count(pack(u, v))) continue;
    add(u, v);
  }
  return g;
}

}  // namespace mstsens
