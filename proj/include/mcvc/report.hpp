#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mcvc/graph.hpp"

namespace mcvc {

// Result of any solver: the chosen vertex set, its exact coverage value and
// whatever bookkeeping the producing algorithm tracked.
struct SolveReport {
  VertexSet solution;
  Rational value;                            // exact coverage of `solution`
  std::optional<Rational> potential_value;   // g(solution) when a potential was used
  std::int64_t swap_count = 0;               // improving exchanges applied, all phases
  std::int64_t max_phase_swaps = 0;          // worst single local-search phase
  std::int64_t sets_explored = 0;            // brute-force enumeration counter
  VertexSet guessed_vertices;                // partial-enumeration guesses of the winner
  std::optional<Rational> epsilon;
  std::optional<Rational> alpha2;
  std::optional<Rational> stream_estimate;   // degree-formula estimate (one-pass streaming)
};

std::string vertex_set_to_string(const VertexSet& s);

}  // namespace mcvc
