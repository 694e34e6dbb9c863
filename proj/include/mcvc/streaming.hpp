#pragma once

#include <cstdint>
#include <vector>

#include "mcvc/exact.hpp"
#include "mcvc/graph.hpp"
#include "mcvc/kernel.hpp"
#include "mcvc/matroid.hpp"
#include "mcvc/report.hpp"

namespace mcvc {

enum class StreamMode { EdgeArrival, Incidence };

struct StreamItem {
  int u = 0;
  int v = 0;
  Rational w;
};

// One vertex's contiguous block in an incidence stream: every edge incident
// to `vertex`, so a non-loop edge appears in both endpoints' groups.
struct IncidenceGroup {
  int vertex = 0;
  std::vector<StreamItem> edges;
};

// Materialized stream over vertices 0..n-1. Simulates both arrival models;
// the `replayable` flag models one-shot sources for the two-pass contract.
class EdgeStream {
 public:
  static EdgeStream edge_arrival(int n, std::vector<StreamItem> items, bool replayable = true);
  static EdgeStream incidence(int n, std::vector<IncidenceGroup> groups);

  static EdgeStream edge_arrival_from_graph(const WeightedGraph& g);
  static EdgeStream shuffled_edge_arrival(const WeightedGraph& g, std::uint64_t seed);
  // Vertex order 0..n-1; every vertex gets a group, isolated ones an empty one.
  static EdgeStream incidence_from_graph(const WeightedGraph& g);
  static EdgeStream shuffled_incidence(const WeightedGraph& g, std::uint64_t seed);

  StreamMode mode() const { return mode_; }
  int vertex_count() const { return n_; }
  bool replayable() const { return replayable_; }
  const std::vector<StreamItem>& items() const;
  const std::vector<IncidenceGroup>& groups() const;

 private:
  EdgeStream(StreamMode mode, int n) : mode_(mode), n_(n) {}

  StreamMode mode_;
  int n_;
  bool replayable_ = true;
  std::vector<StreamItem> items_;
  std::vector<IncidenceGroup> groups_;
};

struct StreamStats {
  std::int64_t peak_retained_edges = 0;
  std::int64_t peak_tracked_vertices = 0;
  int passes = 0;
};

struct StreamResult {
  SolveReport report;
  StreamStats stats;
  VertexSet kernel;  // final kernel vertex set the executor solved over
};

// First pass accumulates weighted degrees, second pass retains the edges
// inside the greedy kernel for eps; the kernel is then solved exactly.
// Requires a replayable edge-arrival stream.
StreamResult two_pass(const EdgeStream& stream, const Matroid& m, const Rational& eps,
                      std::int64_t budget = kDefaultEnumerationBudget);

// Single pass: weighted degrees plus, per vertex, the ceil(2k/eps) heaviest
// incident edges (ties keep the earlier arrival). The kernel is built for
// eps/2 and solved against the optimistic degree-formula estimate; the
// report's value is the solution's true coverage, the estimate is kept in
// stream_estimate.
StreamResult one_pass_edge_arrival(const EdgeStream& stream, const Matroid& m,
                                   const Rational& eps,
                                   std::int64_t budget = kDefaultEnumerationBudget);

// Single pass over an incidence stream: maintains the maximum-weight
// independent set of the scaled union, evicting the lightest circuit
// element (ties evict the larger index), and keeps only edges among kernel
// members. Solved exactly after the pass.
StreamResult one_pass_incidence(const EdgeStream& stream, const Matroid& m,
                                const Rational& eps,
                                std::int64_t budget = kDefaultEnumerationBudget);

}  // namespace mcvc
