#include "mstsens/sensitivity.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "mstsens/treequery.hpp"

namespace mstsens {

namespace {

// Upward path fragment: constrains every tree edge between `lower` and its
// ancestor `upper`, with the given candidate threshold.
struct vertical {
  int lower;
  int upper;
  std::int64_t key;
};

std::vector<bool> tree_mask(const graph& g, const std::vector<int>& tree) {
  std::vector<bool> mask(g.m(), false);
  for (int e : tree) {
    if (e < 0 || e >= g.m() || mask[e])
      throw std::invalid_argument("bad tree edge list");
    mask[e] = true;
  }
  return mask;
}

// Dedup fragments by (lower, upper), keeping the smallest key, and bucket
// them by upper endpoint.
std::vector<std::vector<std::pair<int, std::int64_t>>> bucket_verticals(
    int n, std::vector<vertical>& vs, int* count) {
  std::sort(vs.begin(), vs.end(), [](const vertical& a, const vertical& b) {
    if (a.lower != b.lower) return a.lower < b.lower;
    if (a.upper != b.upper) return a.upper < b.upper;
    return a.key < b.key;
  });
  std::vector<std::vector<std::pair<int, std::int64_t>>> by_upper(n);
  int kept = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0 && vs[i].lower == vs[i - 1].lower && vs[i].upper == vs[i - 1].upper)
      continue;
    by_upper[vs[i].upper].push_back({vs[i].lower, vs[i].key});
    ++kept;
  }
  if (count) *count = kept;
  return by_upper;
}

// Preorder sweep: at each vertex the split-findmin sequence holding its
// position covers exactly its subtree, and the keys decreased so far are
// exactly the fragments whose upper endpoint lies strictly above it.  So a
// findmin before splitting off the children yields the threshold of the
// parent edge.  Returns thresholds indexed by child vertex.
std::vector<std::int64_t> vertical_sweep(
    const rooted_tree& rt,
    const std::vector<std::vector<std::pair<int, std::int64_t>>>& by_upper,
    sf_options opt, sens_stats* stats) {
  int n = rt.n;
  split_findmin sf(std::vector<sf_key>(n), opt);
  std::vector<std::int64_t> out(n, sens_inf);
  for (int i = 0; i < n; ++i) {
    int u = rt.order[i];
    if (u != rt.root) {
      sf_findmin_result r = sf.findmin(i);
      out[u] = r.k.inf ? sens_inf : r.k.value;
    }
    for (int c : rt.children[u]) sf.split(rt.pre[c]);
    for (auto [lower, key] : by_upper[u])
      sf.decreasekey(rt.pre[lower], sf_key::finite(key, lower));
  }
  if (stats) {
    stats->comparisons = sf.comparisons().total;
    stats->by_op = sf.comparisons().by_op;
    stats->sf_level = sf.level();
  }
  return out;
}

int child_endpoint(const graph& g, const rooted_tree& rt, int e) {
  return rt.parent_edge[g.edges[e].u] == e ? g.edges[e].u : g.edges[e].v;
}

sf_options with_expected_ops(sf_options opt, const graph& g) {
  if (opt.expected_ops == 0) opt.expected_ops = std::uint64_t(g.m());
  return opt;
}

}  // namespace

std::vector<std::int64_t> tree_edge_sensitivity(const graph& g,
                                                const std::vector<int>& tree,
                                                sf_options opt,
                                                sens_stats* stats) {
  auto mask = tree_mask(g, tree);
  rooted_tree rt = build_rooted_tree(g, tree, 0);
  lca_index lca(rt);
  std::vector<vertical> vs;
  for (int e = 0; e < g.m(); ++e) {
    if (mask[e]) continue;
    int u = g.edges[e].u, v = g.edges[e].v;
    int a = lca.lca(u, v);
    if (u != a) vs.push_back({u, a, g.edges[e].w});
    if (v != a) vs.push_back({v, a, g.edges[e].w});
  }
  int count = 0;
  auto by_upper = bucket_verticals(g.n, vs, &count);
  auto by_child =
      vertical_sweep(rt, by_upper, with_expected_ops(opt, g), stats);
  if (stats) stats->vertical_edges = count;
  std::vector<std::int64_t> out(tree.size());
  for (std::size_t t = 0; t < tree.size(); ++t)
    out[t] = by_child[child_endpoint(g, rt, tree[t])];
  return out;
}

std::vector<std::int64_t> nontree_edge_sensitivity(
    const graph& g, const std::vector<int>& tree) {
  auto mask = tree_mask(g, tree);
  rooted_tree rt = build_rooted_tree(g, tree, 0);
  path_max_index pm(g, rt);
  std::vector<std::int64_t> out(g.m(), sens_inf);
  for (int e = 0; e < g.m(); ++e) {
    if (mask[e]) continue;
    int heaviest = pm.path_max_edge(g.edges[e].u, g.edges[e].v);
    out[e] = g.edges[heaviest].w;
  }
  return out;
}

std::vector<std::int64_t> mst_sensitivity(const graph& g,
                                          const std::vector<int>& tree,
                                          sf_options opt, sens_stats* stats) {
  auto out = nontree_edge_sensitivity(g, tree);
  auto tree_sens = tree_edge_sensitivity(g, tree, opt, stats);
  for (std::size_t t = 0; t < tree.size(); ++t) out[tree[t]] = tree_sens[t];
  return out;
}

std::vector<std::int64_t> mst_sensitivity_brute(const graph& g,
                                                const std::vector<int>& tree) {
  auto mask = tree_mask(g, tree);
  rooted_tree rt = build_rooted_tree(g, tree, 0);
  std::vector<std::int64_t> out(g.m(), sens_inf);
  for (int te : tree) {
    int c = child_endpoint(g, rt, te);
    std::int64_t best = sens_inf;
    for (int e = 0; e < g.m(); ++e) {
      if (mask[e]) continue;
      bool iu = rt.is_ancestor(c, g.edges[e].u);
      bool iv = rt.is_ancestor(c, g.edges[e].v);
      if (iu != iv) best = std::min(best, g.edges[e].w);
    }
    out[te] = best;
  }
  for (int e = 0; e < g.m(); ++e) {
    if (mask[e]) continue;
    int x = g.edges[e].u, y = g.edges[e].v;
    std::int64_t best = -1;
    int best_id = -1;
    auto lift = [&](int v) {  // take v's parent edge into the running max
      int pe = rt.parent_edge[v];
      if (best_id == -1 || g.edges[pe].w > best ||
          (g.edges[pe].w == best && pe > best_id)) {
        best = g.edges[pe].w;
        best_id = pe;
      }
      return rt.parent[v];
    };
    while (x != y) {
      if (rt.depth[x] >= rt.depth[y])
        x = lift(x);
      else
        y = lift(y);
    }
    out[e] = best;
  }
  return out;
}

bool verify_perturbation(const graph& g, const std::vector<int>& tree, int e,
                         std::int64_t new_w) {
  if (e < 0 || e >= g.m())
    throw std::invalid_argument("verify_perturbation: bad edge id");
  for (int id : tree)
    if (id < 0 || id >= g.m())
      throw std::invalid_argument("verify_perturbation: bad tree edge id");
  graph g2 = g;
  g2.edges[e].w = new_w;
  std::vector<int> t2 = minimum_spanning_tree(g2);
  // At an exact weight tie the solver's id tiebreak may pick another tree
  // of the same weight, so compare weights, not edge sets.
  auto weight_of = [&](const std::vector<int>& ids) {
    std::int64_t w = 0;
    for (int id : ids) w += g2.edges[id].w;
    return w;
  };
  return weight_of(tree) == weight_of(t2);
}

std::vector<std::int64_t> sssp_sensitivity(const graph& g, int src,
                                           sf_options opt,
                                           sens_stats* stats) {
  sssp_result sp = dijkstra(g, src);
  std::vector<int> tree;
  for (int v = 0; v < g.n; ++v)
    if (v != src) tree.push_back(sp.parent_edge[v]);
  auto mask = tree_mask(g, tree);
  rooted_tree rt = build_rooted_tree(g, tree, src);
  lca_index lca(rt);

  std::vector<std::int64_t> out(g.m(), sens_inf);
  std::vector<vertical> vs;
  for (int e = 0; e < g.m(); ++e) {
    if (mask[e]) continue;
    int u = g.edges[e].u, v = g.edges[e].v;
    std::int64_t w = g.edges[e].w;
    out[e] = std::abs(sp.dist[u] - sp.dist[v]);
    // slack of the detour through e, attributed to the endpoint whose
    // shortest path the detour would replace
    int a = lca.lca(u, v);
    if (u != a) vs.push_back({u, a, sp.dist[v] + w - sp.dist[u]});
    if (v != a) vs.push_back({v, a, sp.dist[u] + w - sp.dist[v]});
  }
  int count = 0;
  auto by_upper = bucket_verticals(g.n, vs, &count);
  auto by_child =
      vertical_sweep(rt, by_upper, with_expected_ops(opt, g), stats);
  if (stats) stats->vertical_edges = count;
  for (int te : tree) {
    int c = child_endpoint(g, rt, te);
    out[te] = by_child[c] == sens_inf ? sens_inf
                                      : g.edges[te].w + by_child[c];
  }
  return out;
}

std::vector<std::int64_t> sssp_sensitivity_brute(const graph& g, int src) {
  sssp_result sp = dijkstra(g, src);
  std::vector<int> tree;
  for (int v = 0; v < g.n; ++v)
    if (v != src) tree.push_back(sp.parent_edge[v]);
  auto mask = tree_mask(g, tree);
  rooted_tree rt = build_rooted_tree(g, tree, src);
  std::vector<std::int64_t> out(g.m(), sens_inf);
  for (int e = 0; e < g.m(); ++e)
    if (!mask[e])
      out[e] = std::abs(sp.dist[g.edges[e].u] - sp.dist[g.edges[e].v]);
  for (int te : tree) {
    int c = child_endpoint(g, rt, te);
    std::int64_t slack = sens_inf;
    for (int e = 0; e < g.m(); ++e) {
      if (mask[e]) continue;
      int x = g.edges[e].u, y = g.edges[e].v;
      bool ix = rt.is_ancestor(c, x), iy = rt.is_ancestor(c, y);
      if (ix == iy) continue;
      if (ix) std::swap(x, y);  // y inside the subtree under te
      slack = std::min(slack, sp.dist[x] + g.edges[e].w - sp.dist[y]);
    }
    out[te] = slack == sens_inf ? sens_inf : g.edges[te].w + slack;
  }
  return out;
}

}  // namespace mstsens
