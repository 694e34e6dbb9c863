#pragma once

#include <vector>

#include "mcvc/matroid.hpp"

namespace mcvc {

struct LaminarNode {
  VertexSet elements;  // sorted
  int bound = 0;
  int parent = -1;     // -1 at the root
  int left = -1;       // -1 at leaves
  int right = -1;
  int depth = 0;
};

// Binary tree over a laminar family: node 0 is the root (V, rank), every
// singleton is a leaf, every internal node has exactly two children whose
// element sets partition it, and the total node count is 2n - 1.
class LaminarTree {
 public:
  explicit LaminarTree(std::vector<LaminarNode> nodes, std::vector<int> leaf_of);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const LaminarNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  const std::vector<LaminarNode>& nodes() const { return nodes_; }
  int root() const { return 0; }
  int leaf_of(int vertex) const { return leaf_of_[static_cast<std::size_t>(vertex)]; }

  // Node ids from the leaf of `vertex` up to and including the root.
  std::vector<int> path_to_root(int vertex) const;

 private:
  std::vector<LaminarNode> nodes_;
  std::vector<int> leaf_of_;
};

// Completes the family (root with greedy rank if missing, singleton leaves,
// binarizing nodes with bound = min(parent bound, set size)) and returns the
// binary tree. Input bounds are preserved; duplicated sets keep the smaller
// bound. The resulting tree describes exactly the same matroid.
LaminarTree build_laminar_tree(const Matroid& spec);

}  // namespace mcvc
