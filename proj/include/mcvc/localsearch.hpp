#pragma once

#include <cstdint>

#include "mcvc/exact.hpp"
#include "mcvc/graph.hpp"
#include "mcvc/matroid.hpp"
#include "mcvc/report.hpp"

namespace mcvc {

// Coefficients of the coverage potential g(S) = sum over edges of
// alpha[multiplicity] * w(e).
// alpha[0] = 0 and alpha[1] = 1 are fixed; increments must be nonnegative
// and non-increasing (alpha[2] <= 2 for graphs). alpha[2] = 1 collapses g
// to plain coverage (the oblivious mode).
struct PotentialCoefficients {
  std::vector<Rational> alpha;

  static PotentialCoefficients for_graph(const Rational& alpha2);
  static PotentialCoefficients oblivious() { return for_graph(Rational(1)); }

  const Rational& alpha2() const { return alpha[2]; }
  void validate(int max_multiplicity) const;
};

Rational potential(const WeightedGraph& g, std::span<const int> s,
                   const PotentialCoefficients& coeffs);
Rational potential(const WeightedHypergraph& g, std::span<const int> s,
                   const PotentialCoefficients& coeffs);

// g(S - A + B) - g(S).
Rational exchange_gain(const WeightedGraph& g, const VertexSet& s, const VertexSet& remove,
                       const VertexSet& add, const PotentialCoefficients& coeffs);

// True if some exchange with |A| <= p removed and |B| <= p added keeps the
// set independent and strictly increases g.
bool improving_exchange_exists(const WeightedGraph& g, const IndependenceOracle& m,
                               const VertexSet& s, int p, const PotentialCoefficients& coeffs);

// Largest number of (1+eps)-improving steps any phase may take after the
// greedy start: the smallest b with (1+eps)^b >= 2.
std::int64_t swap_count_bound(const Rational& eps);

// Basis built by repeatedly adding the admissible vertex with the largest
// marginal g-gain, ties broken by ascending index.
VertexSet greedy_basis(const WeightedGraph& g, const IndependenceOracle& m,
                       const PotentialCoefficients& coeffs);

// Single-swap search: start from the greedy basis, apply the first swap
// (s ascending, s' ascending) with g(S - s + s') > (1+eps) g(S) that stays
// independent, until no such swap exists.
SolveReport local_search(const WeightedGraph& g, const IndependenceOracle& m,
                         const Rational& eps, const PotentialCoefficients& coeffs);

// Partial enumeration around local_search with alpha2 = 3/2 and
// eps = 1/(3k)^2: guess each vertex, contract it, search the rest.
SolveReport contracted_search(const WeightedGraph& g, const IndependenceOracle& m);

// Recursive variant at alpha2 = 5/3 (guess a vertex of each local optimum
// and recurse), wrapped in the same partial enumeration. Cost grows with
// k!, so ranks above rank_cap are refused.
SolveReport local_search_34(const WeightedGraph& g, const IndependenceOracle& m,
                            const Rational& eps, int rank_cap = 8);
SolveReport local_search_34(const WeightedGraph& g, const IndependenceOracle& m,
                            int rank_cap = 8);

// Exchange search over two matroids: |A| <= 2p+1 removed, |B| <= 2p added,
// alpha2 = 3/2, partial enumeration over the guessed vertex. The budget
// caps the number of exchange evaluations.
SolveReport two_matroid_search(const WeightedGraph& g, const IndependenceOracle& m1,
                               const IndependenceOracle& m2, int p, const Rational& eps,
                               std::int64_t budget = kDefaultEnumerationBudget);
SolveReport two_matroid_search(const WeightedGraph& g, const IndependenceOracle& m1,
                               const IndependenceOracle& m2, int p,
                               std::int64_t budget = kDefaultEnumerationBudget);

// eps = 1/(3k)^2 with k at least 1.
Rational default_local_search_eps(int k);

}  // namespace mcvc
