#include "mstsens/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mstsens/sensitivity.hpp"
#include "mstsens/treequery.hpp"

namespace mstsens {

namespace {

constexpr int base_case_n = 32;

struct tree_path {  // maximal tree path with interior degree exactly 2
  std::vector<int> verts;  // v[0]..v[k-1]; v[0] leaf or smaller terminal id
  std::vector<int> edges;  // tree edge ids, edges[j] joins v[j], v[j+1]
  bool leaf_end;           // v[0] is a leaf (no contracted edge)
};

std::vector<std::int64_t> solve(const graph& g, const std::vector<int>& tree,
                                const mst_solver& solver,
                                reduction_stats* stats) {
  int n = g.n;
  if (stats) stats->level_n.push_back(n);
  if (n <= base_case_n) {  // no sparsify here, so no level_nontree entry
    auto full = mst_sensitivity_brute(g, tree);
    std::vector<std::int64_t> out(tree.size());
    for (std::size_t t = 0; t < tree.size(); ++t) out[t] = full[tree[t]];
    return out;
  }

  std::vector<bool> mask(g.m(), false);
  for (int e : tree) mask[e] = true;

  // sparsify: only spanning-forest edges of the non-tree graph can realize
  // a tree edge's threshold (cut property)
  graph rest;
  rest.n = n;
  std::vector<int> rest_ids;
  for (int e = 0; e < g.m(); ++e)
    if (!mask[e]) {
      rest.edges.push_back(g.edges[e]);
      rest_ids.push_back(e);
    }
  std::vector<int> kept = solver(rest);
  if (int(kept.size()) > n - 1)
    throw std::logic_error("sparsify: forest has too many edges");
  std::vector<int> nontree;  // original ids
  for (int e : kept) nontree.push_back(rest_ids[e]);
  std::sort(nontree.begin(), nontree.end());
  if (stats) stats->level_nontree.push_back(int(nontree.size()));

  // classify vertices by tree degree and extract maximal paths
  std::vector<int> deg(n, 0);
  for (int e : tree) {
    ++deg[g.edges[e].u];
    ++deg[g.edges[e].v];
  }
  std::vector<int> path_of(n, -1);  // for interiors and leaf ends
  std::vector<int> pos_of(n, -1);
  std::vector<tree_path> paths;
  {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e : tree) {
      adj[g.edges[e].u].push_back({g.edges[e].v, e});
      adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
    std::vector<bool> seen(g.m(), false);
    for (int t = 0; t < n; ++t) {
      if (deg[t] == 2) continue;
      for (auto [v0, e0] : adj[t]) {
        if (seen[e0]) continue;
        tree_path p;
        p.verts.push_back(t);
        int prev = t, cur = v0, via = e0;
        seen[e0] = true;
        p.verts.push_back(cur);
        p.edges.push_back(via);
        while (deg[cur] == 2) {
          for (auto [nx, ne] : adj[cur])
            if (nx != prev) {
              prev = cur;
              cur = nx;
              via = ne;
              break;
            }
          seen[via] = true;
          p.verts.push_back(cur);
          p.edges.push_back(via);
        }
        // orient: leaf end first, otherwise smaller terminal id first
        int a = p.verts.front(), b = p.verts.back();
        bool flip = deg[a] == 1 ? false : (deg[b] == 1 || b < a);
        if (flip) {
          std::reverse(p.verts.begin(), p.verts.end());
          std::reverse(p.edges.begin(), p.edges.end());
        }
        p.leaf_end = deg[p.verts.front()] == 1;
        paths.push_back(std::move(p));
      }
    }
  }
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    const tree_path& p = paths[pi];
    for (std::size_t j = 0; j < p.verts.size(); ++j) {
      int v = p.verts[j];
      if (deg[v] < 3) {  // interiors and leaves belong to their path
        path_of[v] = int(pi);
        pos_of[v] = int(j);
      }
    }
  }

  rooted_tree rt = build_rooted_tree(g, tree, 0);
  lca_index lca(rt);
  auto on_path = [&](int z, int x, int y) {
    int l = lca.lca(x, y);
    return rt.is_ancestor(l, z) &&
           (rt.is_ancestor(z, x) || rt.is_ancestor(z, y));
  };

  // route every surviving non-tree edge: an endpoint interior to a path
  // contributes a covering interval there and re-anchors to the endpoint
  // through which the tree path leaves
  std::vector<std::vector<std::tuple<int, int, std::int64_t>>> spans(
      paths.size());
  std::map<std::pair<int, int>, std::int64_t> external;  // anchor pair -> w
  for (int e : nontree) {
    int x = g.edges[e].u, y = g.edges[e].v;
    std::int64_t w = g.edges[e].w;
    if (path_of[x] != -1 && path_of[x] == path_of[y]) {
      int a = std::min(pos_of[x], pos_of[y]);
      int b = std::max(pos_of[x], pos_of[y]);
      spans[path_of[x]].push_back({a, b, w});
      continue;
    }
    int anchor[2];
    int ends[2] = {x, y};
    for (int s = 0; s < 2; ++s) {
      int v = ends[s], other = ends[1 - s];
      if (path_of[v] == -1) {  // already a junction vertex
        anchor[s] = v;
        continue;
      }
      const tree_path& p = paths[path_of[v]];
      int k = int(p.verts.size());
      int j = pos_of[v];
      bool via_front = !p.leaf_end && on_path(p.verts.front(), v, other);
      if (via_front) {
        anchor[s] = p.verts.front();
        if (j > 0) spans[path_of[v]].push_back({0, j, w});
      } else {
        anchor[s] = p.verts.back();
        if (j < k - 1) spans[path_of[v]].push_back({j, k - 1, w});
      }
    }
    if (anchor[0] == anchor[1]) continue;
    auto key = std::minmax(anchor[0], anchor[1]);
    auto [it, fresh] = external.emplace(key, w);
    if (!fresh && w < it->second) it->second = w;
  }

  // contracted instance over the degree->=3 vertices
  std::vector<int> junction_id(n, -1);
  graph sub;
  for (int v = 0; v < n; ++v)
    if (deg[v] >= 3) junction_id[v] = sub.n++;
  std::vector<int> sub_tree;
  std::vector<int> contracted_slot(paths.size(), -1);
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    const tree_path& p = paths[pi];
    if (p.leaf_end || deg[p.verts.front()] < 3) continue;  // no edge to keep
    std::int64_t w = g.edges[p.edges[0]].w;
    for (int e : p.edges) w = std::min(w, g.edges[e].w);
    contracted_slot[pi] = sub.m();
    sub_tree.push_back(sub.m());
    sub.edges.push_back(
        {junction_id[p.verts.front()], junction_id[p.verts.back()], w});
  }
  for (const auto& [key, w] : external)
    sub.edges.push_back({junction_id[key.first], junction_id[key.second], w});

  std::vector<std::int64_t> sub_sens;
  if (sub.n > 0) {
    if (2 * sub.n >= n)
      throw std::logic_error("condense: junction count not halved");
    sub_sens = solve(sub, sub_tree, solver, stats);
  }

  std::vector<std::int64_t> by_edge(g.m(), sens_inf);
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    const tree_path& p = paths[pi];
    auto internal = internal_path_sensitivity(int(p.verts.size()), spans[pi]);
    std::int64_t outer = contracted_slot[pi] == -1
                             ? sens_inf
                             : sub_sens[contracted_slot[pi]];
    for (std::size_t j = 0; j < p.edges.size(); ++j)
      by_edge[p.edges[j]] = std::min(internal[j], outer);
  }
  std::vector<std::int64_t> out(tree.size());
  for (std::size_t t = 0; t < tree.size(); ++t) out[t] = by_edge[tree[t]];
  return out;
}

}  // namespace

std::vector<std::int64_t> sensitivity_via_mst(const graph& g,
                                              const std::vector<int>& tree,
                                              mst_solver solver,
                                              reduction_stats* stats) {
  std::vector<int> want = minimum_spanning_tree(g);
  std::vector<int> got = tree;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want)
    throw std::invalid_argument(
        "sensitivity_via_mst: tree is not the minimum spanning tree");
  if (!solver) solver = minimum_spanning_forest;
  return solve(g, tree, solver, stats);
}

std::vector<std::int64_t> internal_path_sensitivity(
    int k, const std::vector<std::tuple<int, int, std::int64_t>>& spans) {
  if (k < 2) throw std::invalid_argument("internal_path_sensitivity: k < 2");
  std::vector<std::vector<std::int64_t>> start(k), stop(k);
  for (auto [a, b, w] : spans) {
    if (a < 0 || a >= b || b > k - 1)
      throw std::invalid_argument(
          "internal_path_sensitivity: bad interval");
    start[a].push_back(w);
    stop[b].push_back(w);
  }
  std::multiset<std::int64_t> active;
  std::vector<std::int64_t> out(k - 1, sens_inf);
  for (int j = 0; j < k - 1; ++j) {
    for (std::int64_t w : stop[j]) active.erase(active.find(w));
    for (std::int64_t w : start[j]) active.insert(w);
    if (!active.empty()) out[j] = *active.begin();
  }
  return out;
}

}  // namespace mstsens
