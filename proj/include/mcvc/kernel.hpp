#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mcvc/graph.hpp"
#include "mcvc/matroid.hpp"

namespace mcvc {

// Output of the greedy kernel extraction on the scaled matroid union.
// retained_edges holds every original edge with both endpoints in the
// kernel, plus one self-loop surrogate per edge with exactly one endpoint
// inside, so the kernel graph evaluates coverage exactly for kernel subsets.
struct KernelResult {
  VertexSet kernel_vertices;
  int tau = 0;
  int t = 0;
  std::vector<Edge> retained_edges;
  std::vector<Rational> degw;      // weighted degrees of the full graph
  std::int64_t size_bound = 0;     // per-kind cap on |kernel_vertices|
};

// Hypergraph kernel. Instead of retained edges it aggregates, for every
// nonempty kernel intersection T realized by some hyperedge, the total
// weight of hyperedges whose kernel intersection equals T; coverage of any
// kernel subset is then the sum over intersecting T.
struct HyperKernelResult {
  VertexSet kernel_vertices;
  int tau = 0;
  int t = 0;
  std::vector<std::pair<VertexSet, Rational>> subset_weights;
  std::vector<Rational> degw;
  std::int64_t size_bound = 0;
};

// Union multiplier for the given matroid kind and robustness parameter t:
// t for uniform/partition, 2t for laminar, t + rank - 1 for transversal.
// Throws unsupported_error for explicit matroids.
int union_multiplier(const Matroid& m, int t);

// Greedy kernel vertex selection: process vertices by non-increasing weight
// (ties by ascending index) and keep those extending an independent set of
// the multiplier-scaled union. Shared by the offline and streaming paths.
VertexSet greedy_kernel_vertices(const std::vector<Rational>& weights, const Matroid& m,
                                 int multiplier);

// Kernel extraction with t = ceil(1/eps); requires 0 < eps <= 1 and a
// uniform, partition, laminar or transversal matroid.
KernelResult kernelize(const WeightedGraph& g, const Matroid& m, const Rational& eps);

HyperKernelResult kernelize_hypergraph(const WeightedHypergraph& g, const Matroid& m,
                                       const Rational& eps);

}  // namespace mcvc
