#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mcvc/graph.hpp"
#include "mcvc/kernel.hpp"
#include "mcvc/laminar.hpp"
#include "mcvc/matroid.hpp"

namespace mcvc {

// Certificate that a kernel is t-robust with respect to an independent set
// O: each element of O outside the kernel maps to a pool of t kernel
// vertices, the pools are disjoint, every pool member weight-dominates its
// element, and any one-per-pool selection extends the kernel part of O
// independently.
struct RobustWitness {
  VertexSet base_set;  // O
  std::vector<std::pair<int, VertexSet>> replacements;  // u in O \ V'  ->  U_u
};

// Pool construction for laminar matroids via saturated-node bookkeeping on
// the binary laminar tree. Requires kres built with multiplier 2t and o
// independent; throws internal_error if the bookkeeping ever contradicts its
// invariants (that would be a bug, not an input problem).
RobustWitness laminar_robust_witness(const WeightedGraph& g, const Matroid& m,
                                     const KernelResult& kres, const VertexSet& o);

// Witness construction for uniform/partition (top-of-part pools), laminar
// (tree bookkeeping) and transversal (per-set matched pools) matroids.
RobustWitness build_robust_witness(const WeightedGraph& g, const Matroid& m,
                                   const KernelResult& kres, const VertexSet& o);

// Checks the three robustness conditions. Selections are enumerated
// exhaustively while the number of combinations stays within
// exhaustive_cap, and randomly sampled (seeded) beyond that.
bool witness_valid(const Matroid& m, const KernelResult& kres, const VertexSet& o,
                   const RobustWitness& witness, std::int64_t exhaustive_cap = 10'000,
                   int sample_count = 200, std::uint64_t seed = 1);

// Builds the per-kind witness and validates it.
bool verify_robustness(const WeightedGraph& g, const Matroid& m, const KernelResult& kres,
                       const VertexSet& o);

}  // namespace mcvc
