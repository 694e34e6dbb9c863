#pragma once

#include <cstdint>

#include "mcvc/graph.hpp"
#include "mcvc/kernel.hpp"
#include "mcvc/matroid.hpp"
#include "mcvc/report.hpp"

namespace mcvc {

inline constexpr std::int64_t kDefaultEnumerationBudget = 10'000'000;

// Exact optimum by depth-first enumeration of independent sets in
// lexicographic order; the first maximum found is kept, so ties resolve to
// the lexicographically smallest solution. Throws resource_error once more
// than `budget` independent sets have been visited.
SolveReport brute_force_opt(const WeightedGraph& g, const IndependenceOracle& m,
                            std::int64_t budget = kDefaultEnumerationBudget);
SolveReport brute_force_opt(const WeightedHypergraph& g, const IndependenceOracle& m,
                            std::int64_t budget = kDefaultEnumerationBudget);

// Exact optimum restricted to kernel subsets that are independent in the
// original matroid. Coverage is evaluated against the full graph through the
// retained degrees and edges, never by rescanning the graph.
SolveReport kernel_opt(const WeightedGraph& g, const Matroid& m, const KernelResult& kres,
                       std::int64_t budget = kDefaultEnumerationBudget);
SolveReport kernel_opt(const WeightedHypergraph& g, const Matroid& m,
                       const HyperKernelResult& kres,
                       std::int64_t budget = kDefaultEnumerationBudget);

namespace detail {
// DFS optimizer over subsets of `universe` (ascending) that stay independent
// in `m`, maximizing the weight sum of S minus the weight of proper edges
// with both ends in S. Backs kernel_opt, the two-pass executor and the
// incidence executor.
SolveReport maximize_by_degree_formula(const std::vector<Rational>& vertex_weight,
                                       const std::vector<Edge>& edges,
                                       const VertexSet& universe, const IndependenceOracle& m,
                                       std::int64_t budget);
}  // namespace detail

}  // namespace mcvc
