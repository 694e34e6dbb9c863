#include "mcvc/laminar.hpp"

#include <algorithm>
#include <map>

#include "mcvc/errors.hpp"

namespace mcvc {

LaminarTree::LaminarTree(std::vector<LaminarNode> nodes, std::vector<int> leaf_of)
    : nodes_(std::move(nodes)), leaf_of_(std::move(leaf_of)) {}

std::vector<int> LaminarTree::path_to_root(int vertex) const {
  if (vertex < 0 || vertex >= static_cast<int>(leaf_of_.size())) {
    throw input_error("vertex index out of range");
  }
  std::vector<int> path;
  for (int id = leaf_of(vertex); id != -1; id = nodes_[static_cast<std::size_t>(id)].parent) {
    path.push_back(id);
  }
  return path;
}

namespace {

// Mutable node used while assembling the tree; ids are assigned afterwards.
struct Draft {
  VertexSet elements;
  int bound = 0;
  std::vector<int> children;  // draft indices, ordered by smallest element
};

bool is_subset(const VertexSet& inner, const VertexSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

LaminarTree build_laminar_tree(const Matroid& spec) {
  if (spec.kind() != MatroidKind::Laminar) {
    throw input_error("build_laminar_tree requires a laminar matroid");
  }
  const int n = spec.ground_size();
  if (n == 0) throw input_error("laminar tree over an empty ground set");

  // Deduplicate the family, keeping the tightest bound per set.
  std::map<VertexSet, int> bounds;
  for (const Constraint& c : spec.laminar_sets()) {
    auto [it, inserted] = bounds.emplace(c.elements, c.bound);
    if (!inserted) it->second = std::min(it->second, c.bound);
  }

  VertexSet ground(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) ground[static_cast<std::size_t>(v)] = v;
  if (!bounds.count(ground)) bounds.emplace(ground, rank(spec));
  for (int v = 0; v < n; ++v) {
    bounds.emplace(VertexSet{v}, 1);
  }

  std::vector<Draft> drafts;
  drafts.reserve(bounds.size());
  for (const auto& [elements, bound] : bounds) {
    drafts.push_back(Draft{elements, bound, {}});
  }
  // Largest first so that each draft's parent is the smallest strict superset
  // seen before it.
  std::vector<int> order(drafts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& da = drafts[static_cast<std::size_t>(a)];
    const auto& db = drafts[static_cast<std::size_t>(b)];
    if (da.elements.size() != db.elements.size()) {
      return da.elements.size() > db.elements.size();
    }
    return da.elements < db.elements;
  });

  int root_draft = order.front();
  std::vector<int> parent(drafts.size(), -1);
  for (std::size_t oi = 1; oi < order.size(); ++oi) {
    int id = order[oi];
    int best = -1;
    for (std::size_t oj = 0; oj < oi; ++oj) {
      int cand = order[oj];
      const auto& cs = drafts[static_cast<std::size_t>(cand)].elements;
      const auto& is = drafts[static_cast<std::size_t>(id)].elements;
      if (cs.size() == is.size()) continue;
      if (!is_subset(is, cs)) continue;
      if (best == -1 ||
          cs.size() < drafts[static_cast<std::size_t>(best)].elements.size()) {
        best = cand;
      }
    }
    if (best == -1) throw internal_error("laminar draft without a parent");
    parent[static_cast<std::size_t>(id)] = best;
    drafts[static_cast<std::size_t>(best)].children.push_back(id);
  }

  for (auto& draft : drafts) {
    std::sort(draft.children.begin(), draft.children.end(), [&](int a, int b) {
      return drafts[static_cast<std::size_t>(a)].elements.front() <
             drafts[static_cast<std::size_t>(b)].elements.front();
    });
  }

  // Binarize: fold the two trailing children of any over-wide node into a
  // fresh draft with bound min(parent bound, |union|).
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    while (drafts[i].children.size() > 2) {
      int a = drafts[i].children[drafts[i].children.size() - 2];
      int b = drafts[i].children.back();
      VertexSet merged;
      std::merge(drafts[static_cast<std::size_t>(a)].elements.begin(),
                 drafts[static_cast<std::size_t>(a)].elements.end(),
                 drafts[static_cast<std::size_t>(b)].elements.begin(),
                 drafts[static_cast<std::size_t>(b)].elements.end(),
                 std::back_inserter(merged));
      Draft combined;
      combined.bound = std::min(drafts[i].bound, static_cast<int>(merged.size()));
      combined.elements = std::move(merged);
      combined.children = {a, b};
      drafts.push_back(std::move(combined));
      drafts[i].children.pop_back();
      drafts[i].children.back() = static_cast<int>(drafts.size() - 1);
    }
    if (drafts[i].children.size() == 1) {
      throw internal_error("laminar node with a single child after completion");
    }
  }

  // Preorder id assignment.
  std::vector<LaminarNode> nodes;
  nodes.reserve(2 * static_cast<std::size_t>(n) - 1);
  std::vector<int> leaf_of(static_cast<std::size_t>(n), -1);
  auto emit = [&](auto&& self, int draft_id, int parent_id, int depth) -> int {
    const Draft& draft = drafts[static_cast<std::size_t>(draft_id)];
    int id = static_cast<int>(nodes.size());
    // Clamp to the parent's bound: a child never sees more of S than its
    // parent does, so
    // this changes nothing about the matroid while keeping bounds monotone
    // along every root path.
    int bound = draft.bound;
    if (parent_id != -1) {
      bound = std::min(bound, nodes[static_cast<std::size_t>(parent_id)].bound);
    }
    nodes.push_back(LaminarNode{draft.elements, bound, parent_id, -1, -1, depth});
    if (draft.children.empty()) {
      if (draft.elements.size() != 1) throw internal_error("non-singleton laminar leaf");
      leaf_of[static_cast<std::size_t>(draft.elements.front())] = id;
    } else {
      nodes[static_cast<std::size_t>(id)].left =
          self(self, draft.children[0], id, depth + 1);
      nodes[static_cast<std::size_t>(id)].right =
          self(self, draft.children[1], id, depth + 1);
    }
    return id;
  };
  emit(emit, root_draft, -1, 0);

  if (nodes.size() != 2 * static_cast<std::size_t>(n) - 1) {
    throw internal_error("laminar tree has " + std::to_string(nodes.size()) +
                         " nodes, expected " + std::to_string(2 * n - 1));
  }
  return LaminarTree(std::move(nodes), std::move(leaf_of));
}

}  // namespace mcvc
