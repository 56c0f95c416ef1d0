#pragma once

#include <cstdint>
#include <functional>
#include <tuple>
#include <vector>

#include "mstsens/graph.hpp"

namespace mstsens {

struct reduction_stats {
  std::vector<int> level_n;        // vertex count entering each level
  std::vector<int> level_nontree;  // non-tree edges surviving the filter
  int levels() const { return int(level_n.size()); }
};

// Pluggable spanning-forest routine used to sparsify: must return edge ids
// of a minimum spanning forest of its argument.
using mst_solver = std::function<std::vector<int>(const graph&)>;

// Tree-edge sensitivities (indexed by position in `tree`) by recursive
// contraction: filter the non-tree edges down to their spanning forest,
// split straddling edges at path endpoints, condense degree-<=2 tree paths,
// solve the path-internal part by a sweep and the contracted instance
// recursively, and take the minimum of the two per edge.  Instances with
// n <= 32 fall back to the quadratic reference.  Requires tree = mst(g)
// (std::invalid_argument otherwise).
std::vector<std::int64_t> sensitivity_via_mst(const graph& g,
                                              const std::vector<int>& tree,
                                              mst_solver solver = {},
                                              reduction_stats* stats = nullptr);

// Thresholds for the k-1 edges of a path with k >= 2 positions, given
// covering intervals: edge j (between positions j and j+1) receives the
// minimum weight over intervals (a, b, w) with a <= j < b, or sens_inf.
// Positions are 0-indexed; requires 0 <= a < b <= k-1.
std::vector<std::int64_t> internal_path_sensitivity(
    int k, const std::vector<std::tuple<int, int, std::int64_t>>& spans);

}  // namespace mstsens
