#include "mstsens/treequery.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mstsens {

rooted_tree build_rooted_tree(const graph& g,
                              const std::vector<int>& tree_edges, int root) {
  int n = g.n;
  if (root < 0 || root >= n)
    throw std::invalid_argument("build_rooted_tree: root out of range");
  if (int(tree_edges.size()) != n - 1)
    throw std::invalid_argument("build_rooted_tree: not a spanning tree");
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e : tree_edges) {
    if (e < 0 || e >= g.m())
      throw std::invalid_argument("build_rooted_tree: bad edge id");
    adj[g.edges[e].u].push_back({g.edges[e].v, e});
    adj[g.edges[e].v].push_back({g.edges[e].u, e});
  }
  for (auto& a : adj)  // children in increasing edge id order
    std::sort(a.begin(), a.end(),
              [](auto& x, auto& y) { return x.second < y.second; });

  rooted_tree t;
  t.n = n;
  t.root = root;
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.depth.assign(n, 0);
  t.pre.assign(n, -1);
  t.order.reserve(n);
  t.children.assign(n, {});

  std::vector<std::pair<int, int>> stack;  // vertex, parent
  stack.push_back({root, -1});
  while (!stack.empty()) {
    auto [u, p] = stack.back();
    stack.pop_back();
    if (t.pre[u] != -1)
      throw std::invalid_argument("build_rooted_tree: edges contain a cycle");
    t.pre[u] = int(t.order.size());
    t.order.push_back(u);
    // push in reverse so children pop in adjacency order
    for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it) {
      auto [v, e] = *it;
      if (v == p) continue;
      if (t.parent_edge[v] != -1 && v != root)
        throw std::invalid_argument("build_rooted_tree: edges contain a cycle");
      t.parent[v] = u;
      t.parent_edge[v] = e;
      stack.push_back({v, u});
    }
  }
  for (int v = 0; v < n; ++v)
    if (t.pre[v] == -1)
      throw std::invalid_argument("build_rooted_tree: tree not spanning");
  for (int i = 1; i < n; ++i) {  // preorder: parents precede children
    int v = t.order[i];
    t.depth[v] = t.depth[t.parent[v]] + 1;
    t.children[t.parent[v]].push_back(v);
  }
  t.subtree_end.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    int v = t.order[i];
    t.subtree_end[i] = i;
    for (int c : t.children[v])
      t.subtree_end[i] = std::max(t.subtree_end[i], t.subtree_end[t.pre[c]]);
  }
  return t;
}

lca_index::lca_index(const rooted_tree& t) : t_(&t) {
  int n = t.n;
  first_.assign(n, -1);
  tour_.reserve(2 * n);
  // iterative Euler tour: vertex re-appears after each child subtree
  std::vector<std::pair<int, int>> stack;  // vertex, next child index
  stack.push_back({t.root, 0});
  first_[t.root] = 0;
  tour_.push_back(t.root);
  while (!stack.empty()) {
    auto& [u, ci] = stack.back();
    if (ci == int(t.children[u].size())) {
      stack.pop_back();
      if (!stack.empty()) tour_.push_back(stack.back().first);
      continue;
    }
    int c = t.children[u][ci++];
    first_[c] = int(tour_.size());
    tour_.push_back(c);
    stack.push_back({c, 0});
  }
  int len = int(tour_.size());
  int logs = std::bit_width(unsigned(len));
  table_.assign(logs, std::vector<int>(len));
  for (int i = 0; i < len; ++i) table_[0][i] = i;
  for (int k = 1; k < logs; ++k)
    for (int i = 0; i + (1 << k) <= len; ++i)
      table_[k][i] = shallower(table_[k - 1][i], table_[k - 1][i + (1 << (k - 1))]);
}

int lca_index::shallower(int a, int b) const {
  return t_->depth[tour_[a]] <= t_->depth[tour_[b]] ? a : b;
}

int lca_index::lca(int u, int v) const {
  int a = first_[u], b = first_[v];
  if (a > b) std::swap(a, b);
  int k = std::bit_width(unsigned(b - a + 1)) - 1;
  return tour_[shallower(table_[k][a], table_[k][b - (1 << k) + 1])];
}

path_max_index::path_max_index(const graph& g, const rooted_tree& t)
    : g_(&g), t_(&t), lca_(t) {
  int n = t.n;
  int logs = std::max(1, int(std::bit_width(unsigned(n))));
  up_.assign(logs, std::vector<int>(n, -1));
  up_max_.assign(logs, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    up_[0][v] = t.parent[v];
    up_max_[0][v] = t.parent_edge[v];
  }
  for (int k = 1; k < logs; ++k)
    for (int v = 0; v < n; ++v) {
      int mid = up_[k - 1][v];
      if (mid == -1) continue;
      up_[k][v] = up_[k - 1][mid];
      up_max_[k][v] = max_edge(up_max_[k - 1][v], up_max_[k - 1][mid]);
    }
}

int path_max_index::max_edge(int a, int b) const {
  if (a == -1) return b;
  if (b == -1) return a;
  return edge_less(*g_, a, b) ? b : a;
}

int path_max_index::climb_max(int v, int steps) const {
  int best = -1;
  for (int k = 0; steps; ++k, steps >>= 1)
    if (steps & 1) {
      best = max_edge(best, up_max_[k][v]);
      v = up_[k][v];
    }
  return best;
}

int path_max_index::path_max_edge(int u, int v) const {
  if (u == v)
    throw std::invalid_argument("path_max_edge: endpoints coincide");
  int a = lca_.lca(u, v);
  int best = max_edge(climb_max(u, t_->depth[u] - t_->depth[a]),
                      climb_max(v, t_->depth[v] - t_->depth[a]));
  return best;
}

}  // namespace mstsens
