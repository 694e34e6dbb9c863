#include "mcvc/graph.hpp"

#include <algorithm>
#include <string>

#include "mcvc/errors.hpp"

namespace mcvc {

VertexSet canonical_set(std::span<const int> s) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

namespace {

std::vector<char> membership(std::span<const int> s, int n, const char* what) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : s) {
    if (v < 0 || v >= n) {
      throw input_error(std::string(what) + ": vertex index " + std::to_string(v) +
                        " out of range [0, " + std::to_string(n) + ")");
    }
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

}  // namespace

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), incident_(static_cast<std::size_t>(n)),
      degw_(static_cast<std::size_t>(n)) {
  if (n < 0) throw input_error("negative vertex count");
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw input_error("edge " + std::to_string(id) + " has an endpoint out of range");
    }
    if (e.w.is_negative()) {
      throw input_error("edge " + std::to_string(id) + " has negative weight");
    }
    incident_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(id));
    if (!e.is_loop()) incident_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(id));
    degw_[static_cast<std::size_t>(e.u)] += e.w;
    if (!e.is_loop()) degw_[static_cast<std::size_t>(e.v)] += e.w;
  }
}

std::span<const int> WeightedGraph::incident_edges(int v) const {
  check_vertex(v);
  return incident_[static_cast<std::size_t>(v)];
}

const Rational& WeightedGraph::weighted_degree(int v) const {
  check_vertex(v);
  return degw_[static_cast<std::size_t>(v)];
}

Rational WeightedGraph::total_weight() const {
  Rational total;
  for (const Edge& e : edges_) total += e.w;
  return total;
}

Rational WeightedGraph::coverage(std::span<const int> s) const {
  std::vector<char> in = membership(s, n_, "coverage");
  Rational total;
  for (const Edge& e : edges_) {
    if (in[static_cast<std::size_t>(e.u)] || in[static_cast<std::size_t>(e.v)]) total += e.w;
  }
  return total;
}

int WeightedGraph::covered_multiplicity(std::span<const int> s, int edge_id) const {
  if (edge_id < 0 || edge_id >= edge_count()) throw input_error("edge id out of range");
  std::vector<char> in = membership(s, n_, "covered_multiplicity");
  const Edge& e = edges_[static_cast<std::size_t>(edge_id)];
  if (e.is_loop()) return in[static_cast<std::size_t>(e.u)] ? 1 : 0;
  return (in[static_cast<std::size_t>(e.u)] ? 1 : 0) + (in[static_cast<std::size_t>(e.v)] ? 1 : 0);
}

WeightedGraph WeightedGraph::without_vertex_edges(int v) const {
  check_vertex(v);
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.u != v && e.v != v) kept.push_back(e);
  }
  return WeightedGraph(n_, std::move(kept));
}

void WeightedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw input_error("vertex index " + std::to_string(v) + " out of range");
  }
}

WeightedHypergraph::WeightedHypergraph(int n, std::vector<HyperEdge> edges, int eta)
    : n_(n), eta_(eta), edges_(std::move(edges)), degw_(static_cast<std::size_t>(n)) {
  if (n < 0) throw input_error("negative vertex count");
  if (eta < 1) throw input_error("eta must be at least 1");
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    HyperEdge& e = edges_[id];
    e.vertices = canonical_set(e.vertices);
    if (e.vertices.empty()) throw input_error("hyperedge " + std::to_string(id) + " is empty");
    if (static_cast<int>(e.vertices.size()) > eta_) {
      throw input_error("hyperedge " + std::to_string(id) + " exceeds eta");
    }
    if (e.w.is_negative()) {
      throw input_error("hyperedge " + std::to_string(id) + " has negative weight");
    }
    for (int v : e.vertices) {
      if (v < 0 || v >= n_) {
        throw input_error("hyperedge " + std::to_string(id) + " has an endpoint out of range");
      }
      degw_[static_cast<std::size_t>(v)] += e.w;
    }
  }
}

const Rational& WeightedHypergraph::weighted_degree(int v) const {
  if (v < 0 || v >= n_) throw input_error("vertex index out of range");
  return degw_[static_cast<std::size_t>(v)];
}

Rational WeightedHypergraph::coverage(std::span<const int> s) const {
  std::vector<char> in = membership(s, n_, "coverage");
  Rational total;
  for (const HyperEdge& e : edges_) {
    for (int v : e.vertices) {
      if (in[static_cast<std::size_t>(v)]) {
        total += e.w;
        break;
      }
    }
  }
  return total;
}

int WeightedHypergraph::covered_multiplicity(std::span<const int> s, int edge_id) const {
  if (edge_id < 0 || edge_id >= edge_count()) throw input_error("edge id out of range");
  std::vector<char> in = membership(s, n_, "covered_multiplicity");
  int count = 0;
  for (int v : edges_[static_cast<std::size_t>(edge_id)].vertices) {
    count += in[static_cast<std::size_t>(v)] ? 1 : 0;
  }
  return count;
}

}  // namespace mcvc
