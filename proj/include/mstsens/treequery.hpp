#pragma once

#include <vector>

#include "mstsens/graph.hpp"

namespace mstsens {

// Spanning tree of g rooted at `root`, with preorder numbering (children
// visited in adjacency order, i.e. increasing edge id).
struct rooted_tree {
  int n = 0;
  int root = 0;
  std::vector<int> parent;       // vertex, -1 at root
  std::vector<int> parent_edge;  // edge id in g, -1 at root
  std::vector<int> depth;
  std::vector<int> pre;          // preorder index of each vertex
  std::vector<int> order;        // vertex at each preorder index
  std::vector<int> subtree_end;  // last preorder index in the subtree
  std::vector<std::vector<int>> children;

  bool is_ancestor(int a, int d) const {  // a == d counts
    return pre[a] <= pre[d] && pre[d] <= subtree_end[pre[a]];
  }
};

// tree_edges must form a spanning tree of g (std::invalid_argument
// otherwise).
rooted_tree build_rooted_tree(const graph& g, const std::vector<int>& tree_edges,
                              int root);

// Constant-time lowest common ancestor via Euler tour + sparse table.
class lca_index {
 public:
  explicit lca_index(const rooted_tree& t);
  int lca(int u, int v) const;

 private:
  const rooted_tree* t_;
  std::vector<int> first_;                  // first tour position of vertex
  std::vector<int> tour_;                   // vertex at tour position
  std::vector<std::vector<int>> table_;     // sparse table of tour positions
  int shallower(int a, int b) const;
};

// Maximum-weight edge (by (w, id)) on tree paths, via binary lifting.
class path_max_index {
 public:
  path_max_index(const graph& g, const rooted_tree& t);
  // edge id of the maximum edge on the u-v tree path; u != v required
  int path_max_edge(int u, int v) const;

 private:
  const graph* g_;
  const rooted_tree* t_;
  lca_index lca_;
  std::vector<std::vector<int>> up_;      // 2^k-th ancestor
  std::vector<std::vector<int>> up_max_;  // max edge id on that hop
  int max_edge(int a, int b) const;       // -1 absorbs
  int climb_max(int v, int steps) const;
};

}  // namespace mstsens
