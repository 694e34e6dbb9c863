#pragma once

#include <cstdint>

#include "mcvc/graph.hpp"
#include "mcvc/matroid.hpp"

namespace mcvc {

struct Instance {
  WeightedGraph graph;
  Matroid matroid;
};

// Two disjoint edges, weights 2 and 1-eps, under a rank-2 uniform matroid.
// The potential-guided single-swap search parks on the heavy edge, while the
// optimum covers both.
Instance gen_fig3(const Rational& eps);

// Three layers a_i / b_i / c_i (k each): complete bipartite a-b with unit
// weights plus pendant edges b_i-c_i of weight k/2, rank-k uniform matroid.
// The a-layer is swap-optimal at ratio exactly 2/3.
Instance gen_fig4(int k);

// Same shape as gen_fig4 with pendant weight k(1-eps); the a-layer is a
// local optimum of plain coverage under bounded exchanges, at ratio 1/2.
Instance gen_fig6(int k, const Rational& eps);

struct RandomSpec {
  int n = 8;
  int m_edges = 12;
  std::int64_t weight_min = 1;
  std::int64_t weight_max = 10;
  MatroidKind kind = MatroidKind::Uniform;
  std::uint64_t seed = 1;
  int max_rank = 0;  // 0 = min(n, 4)
};

// Seed-deterministic random simple graph plus a valid matroid of the
// requested kind with rank between 1 and max_rank.
Instance gen_random(const RandomSpec& spec);

WeightedHypergraph gen_random_hypergraph(int n, int m_edges, int eta, std::int64_t weight_min,
                                         std::int64_t weight_max, std::uint64_t seed);

}  // namespace mcvc
