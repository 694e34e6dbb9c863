#pragma once

#include <span>
#include <vector>

#include "mcvc/rational.hpp"

namespace mcvc {

// Vertex sets are sorted, duplicate-free index vectors everywhere in the API.
using VertexSet = std::vector<int>;

// Returns a sorted duplicate-free copy.
VertexSet canonical_set(std::span<const int> s);
bool set_contains(const VertexSet& s, int v);

struct Edge {
  int u = 0;
  int v = 0;
  Rational w;

  bool is_loop() const { return u == v; }
};

// Edge-weighted undirected graph. Parallel edges stay distinct and
// self-loops are allowed (they count once in weighted degrees and coverage).
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  std::span<const int> incident_edges(int v) const;

  const Rational& weighted_degree(int v) const;
  const std::vector<Rational>& weighted_degrees() const { return degw_; }
  Rational total_weight() const;

  // Total weight of edges with at least one endpoint in s.
  Rational coverage(std::span<const int> s) const;
  // Number of endpoints of the edge inside s; a loop contributes at most 1.
  int covered_multiplicity(std::span<const int> s, int edge_id) const;

  // Copy with delta(v) removed (vertex stays in the index space).
  WeightedGraph without_vertex_edges(int v) const;

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<Rational> degw_;
};

struct HyperEdge {
  std::vector<int> vertices;  // sorted, duplicate-free
  Rational w;
};

class WeightedHypergraph {
 public:
  // eta is the declared maximum edge size; every edge must be nonempty and
  // no larger than eta.
  WeightedHypergraph(int n, std::vector<HyperEdge> edges, int eta);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int eta() const { return eta_; }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  const HyperEdge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  const Rational& weighted_degree(int v) const;
  const std::vector<Rational>& weighted_degrees() const { return degw_; }

  Rational coverage(std::span<const int> s) const;
  int covered_multiplicity(std::span<const int> s, int edge_id) const;

 private:
  int n_;
  int eta_;
  std::vector<HyperEdge> edges_;
  std::vector<Rational> degw_;
};

}  // namespace mcvc
