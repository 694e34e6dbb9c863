#pragma once

// Test-side oracles, deliberately implemented from the definitions rather
// than through the library's code paths, so the two can disagree.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mcvc/graph.hpp"
#include "mcvc/matroid.hpp"
#include "mcvc/rng.hpp"

namespace mcvc_test {

using mcvc::Rational;
using mcvc::VertexSet;

inline VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet out;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

inline std::uint32_t set_to_mask(const VertexSet& s) {
  std::uint32_t mask = 0;
  for (int v : s) mask |= 1u << v;
  return mask;
}

// Transversal independence by plain backtracking over set assignments; no
// augmenting paths involved.
inline bool transversal_independent_backtracking(const std::vector<VertexSet>& sets,
                                                 const VertexSet& s, int capacity = 1) {
  std::vector<int> load(sets.size(), 0);
  auto rec = [&](auto&& self, std::size_t next) -> bool {
    if (next == s.size()) return true;
    for (std::size_t a = 0; a < sets.size(); ++a) {
      if (load[a] >= capacity) continue;
      if (!std::binary_search(sets[a].begin(), sets[a].end(), s[next])) continue;
      ++load[a];
      if (self(self, next + 1)) return true;
      --load[a];
    }
    return false;
  };
  return rec(rec, 0);
}

// Coverage by definition: one pass over the edges, each counted once.
inline Rational coverage_by_definition(const mcvc::WeightedGraph& g, const VertexSet& s) {
  Rational total;
  for (const mcvc::Edge& e : g.edges()) {
    if (std::binary_search(s.begin(), s.end(), e.u) ||
        std::binary_search(s.begin(), s.end(), e.v)) {
      total += e.w;
    }
  }
  return total;
}

// Exhaustive optimum over all 2^n subsets (not DFS over independent sets):
// ties resolve to the lexicographically smallest sorted set.
struct ExhaustiveOpt {
  Rational value;
  VertexSet solution;
};

inline ExhaustiveOpt exhaustive_optimum(const mcvc::WeightedGraph& g,
                                        const mcvc::IndependenceOracle& m) {
  ExhaustiveOpt best;
  best.value = Rational(0);
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s = mask_to_set(mask);
    if (!m.is_independent(s)) continue;
    Rational value = coverage_by_definition(g, s);
    if (best.value < value) {
      best.value = value;
      best.solution = s;
    } else if (value == best.value && !best.solution.empty() &&
               std::lexicographical_compare(s.begin(), s.end(), best.solution.begin(),
                                            best.solution.end())) {
      best.solution = s;
    }
  }
  return best;
}

// All independent subsets of a small ground set, as bitmasks.
inline std::vector<std::uint32_t> all_independent_masks(const mcvc::IndependenceOracle& m) {
  std::vector<std::uint32_t> out;
  const int n = m.ground_size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (m.is_independent(mask_to_set(mask))) out.push_back(mask);
  }
  return out;
}

inline VertexSet random_subset(int n, mcvc::Rng& rng) {
  VertexSet out;
  for (int v = 0; v < n; ++v) {
    if (rng.flip()) out.push_back(v);
  }
  return out;
}

}  // namespace mcvc_test
