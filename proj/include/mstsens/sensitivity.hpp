#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "mstsens/graph.hpp"
#include "mstsens/splitfindmin.hpp"

namespace mstsens {

// Sensitivities are thresholds on the perturbed weight: a tree edge leaves
// the structure when its weight rises strictly above its sensitivity, a
// non-tree edge enters when its weight drops strictly below it.  Edges
// whose threshold is unbounded report sens_inf.
constexpr std::int64_t sens_inf = std::numeric_limits<std::int64_t>::max();

struct sens_stats {
  std::uint64_t comparisons = 0;  // key comparisons inside split-findmin
  std::array<std::uint64_t, 4> by_op{};
  int vertical_edges = 0;  // upward path fragments after dedup
  int sf_level = 0;
};

// Sensitivities of the tree edges only, indexed by position in `tree`:
// replace each non-tree edge by vertical fragments through the lca, then
// sweep the tree in preorder with one split-findmin structure.
std::vector<std::int64_t> tree_edge_sensitivity(const graph& g,
                                                const std::vector<int>& tree,
                                                sf_options opt = {},
                                                sens_stats* stats = nullptr);

// Non-tree edges only, by the heaviest tree edge on the connecting path;
// indexed by edge id, tree slots left at sens_inf.
std::vector<std::int64_t> nontree_edge_sensitivity(const graph& g,
                                                   const std::vector<int>& tree);

// All edges, indexed by edge id: tree edges as above, non-tree edges by the
// heaviest tree edge on the connecting path.
std::vector<std::int64_t> mst_sensitivity(const graph& g,
                                          const std::vector<int>& tree,
                                          sf_options opt = {},
                                          sens_stats* stats = nullptr);

// Quadratic reference: cut scan per tree edge, path walk per non-tree edge.
std::vector<std::int64_t> mst_sensitivity_brute(const graph& g,
                                                const std::vector<int>& tree);

// Re-runs the spanning tree computation with edge `e` reweighted to new_w
// and reports whether `tree` is still of minimum weight (at an exact
// threshold tie several spanning trees are minimum; that counts as true).
bool verify_perturbation(const graph& g, const std::vector<int>& tree, int e,
                         std::int64_t new_w);

// Shortest-path-tree sensitivities from src, indexed by edge id.  Tree
// edges report the weight at which some vertex acquires a shorter path
// around them (increases only); non-tree edges report |d(u) - d(v)|, the
// weight below which they shortcut some shortest path.
std::vector<std::int64_t> sssp_sensitivity(const graph& g, int src,
                                           sf_options opt = {},
                                           sens_stats* stats = nullptr);

std::vector<std::int64_t> sssp_sensitivity_brute(const graph& g, int src);

}  // namespace mstsens
