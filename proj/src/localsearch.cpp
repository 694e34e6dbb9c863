#include "mcvc/localsearch.hpp"

#include <algorithm>
#include <cmath>

#include "mcvc/errors.hpp"

namespace mcvc {
namespace {

// Edge multiplicities and the running potential value for one vertex set,
// updated one vertex at a time.
class PotentialState {
 public:
  PotentialState(const WeightedGraph& g, const PotentialCoefficients& coeffs)
      : g_(&g), coeffs_(&coeffs),
        multiplicity_(static_cast<std::size_t>(g.edge_count()), 0) {}

  const Rational& value() const { return value_; }

  Rational add_gain(int v) const {
    Rational gain;
    for (int id : g_->incident_edges(v)) {
      int c = multiplicity_[static_cast<std::size_t>(id)];
      gain += (coeffs_->alpha[static_cast<std::size_t>(c + 1)] -
               coeffs_->alpha[static_cast<std::size_t>(c)]) *
              g_->edge(id).w;
    }
    return gain;
  }

  void add(int v) {
    for (int id : g_->incident_edges(v)) {
      int c = multiplicity_[static_cast<std::size_t>(id)]++;
      value_ += (coeffs_->alpha[static_cast<std::size_t>(c + 1)] -
                 coeffs_->alpha[static_cast<std::size_t>(c)]) *
                g_->edge(id).w;
    }
  }

  void remove(int v) {
    for (int id : g_->incident_edges(v)) {
      int c = --multiplicity_[static_cast<std::size_t>(id)];
      value_ -= (coeffs_->alpha[static_cast<std::size_t>(c + 1)] -
                 coeffs_->alpha[static_cast<std::size_t>(c)]) *
                g_->edge(id).w;
    }
  }

  // g(S - out + in) without mutating the logical set.
  Rational swapped_value(int out, int in) {
    remove(out);
    add(in);
    Rational result = value_;
    remove(in);
    add(out);
    return result;
  }

 private:
  const WeightedGraph* g_;
  const PotentialCoefficients* coeffs_;
  std::vector<int> multiplicity_;
  Rational value_;
};

VertexSet sorted_insert(VertexSet s, int v) {
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

VertexSet sorted_erase(VertexSet s, int v) {
  s.erase(std::lower_bound(s.begin(), s.end(), v));
  return s;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Inner loop of Local-Search: returns the number of applied swaps and
// leaves `s` at a (1+eps)-local optimum of g.
std::int64_t run_swap_phase(const WeightedGraph& g, const IndependenceOracle& m,
                            const Rational& eps, PotentialState& state, VertexSet& s) {
  const int n = g.vertex_count();
  std::int64_t swaps = 0;
  bool improved = true;
  while (improved) {
    improved = false;
    Rational threshold = (Rational(1) + eps) * state.value();
    for (std::size_t i = 0; i < s.size() && !improved; ++i) {
      int out = s[i];
      for (int in = 0; in < n && !improved; ++in) {
        if (set_contains(s, in)) continue;
        if (!(threshold < state.swapped_value(out, in))) continue;
        VertexSet candidate = sorted_insert(sorted_erase(s, out), in);
        if (!m.is_independent(candidate)) continue;
        state.remove(out);
        state.add(in);
        s = std::move(candidate);
        ++swaps;
        improved = true;
      }
    }
  }
  return swaps;
}

struct BranchResult {
  VertexSet solution;
  std::int64_t swap_count = 0;
  std::int64_t max_phase_swaps = 0;
};

// Recursive core of the 3/4 variant: local search at the caller's
// coefficients, then guess each solution vertex and recurse on the graph
// and matroid with that vertex removed/contracted.
BranchResult ls34_recursive(const WeightedGraph& g, const IndependenceOracle& m,
                            const Rational& eps, const PotentialCoefficients& coeffs) {
  PotentialState state(g, coeffs);
  VertexSet s = greedy_basis(g, m, coeffs);
  for (int v : s) state.add(v);
  BranchResult best;
  best.swap_count = run_swap_phase(g, m, eps, state, s);
  best.max_phase_swaps = best.swap_count;
  best.solution = s;
  Rational best_value = g.coverage(best.solution);

  for (int guess : s) {
    WeightedGraph sub_graph = g.without_vertex_edges(guess);
    ContractView sub_matroid(m, VertexSet{guess});
    BranchResult sub = ls34_recursive(sub_graph, sub_matroid, eps, coeffs);
    VertexSet candidate = sorted_insert(sub.solution, guess);
    Rational value = g.coverage(candidate);
    best.swap_count += sub.swap_count;
    best.max_phase_swaps = std::max(best.max_phase_swaps, sub.max_phase_swaps);
    if (best_value < value || (value == best_value && lex_less(candidate, best.solution))) {
      best_value = value;
      best.solution = std::move(candidate);
    }
  }
  return best;
}

template <typename Fn>
void for_each_subset(const VertexSet& items, int size, Fn&& fn) {
  VertexSet pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == size) {
      fn(pick);
      return;
    }
    std::size_t remaining = static_cast<std::size_t>(size) - pick.size();
    for (std::size_t i = from; i + remaining <= items.size(); ++i) {
      pick.push_back(items[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

PotentialCoefficients PotentialCoefficients::for_graph(const Rational& alpha2) {
  PotentialCoefficients coeffs;
  coeffs.alpha = {Rational(0), Rational(1), alpha2};
  coeffs.validate(2);
  return coeffs;
}

void PotentialCoefficients::validate(int max_multiplicity) const {
  if (static_cast<int>(alpha.size()) < max_multiplicity + 1) {
    throw input_error("potential coefficients cover multiplicities up to " +
                      std::to_string(static_cast<int>(alpha.size()) - 1) + ", need " +
                      std::to_string(max_multiplicity));
  }
  if (!alpha[0].is_zero() || alpha[1] != Rational(1)) {
    throw input_error("potential coefficients must start 0, 1");
  }
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    Rational step = alpha[i] - alpha[i - 1];
    if (step.is_negative()) {
      throw input_error("potential coefficients must be nondecreasing");
    }
    if (i >= 2 && alpha[i - 1] - alpha[i - 2] < step) {
      throw input_error("potential coefficient increments must be non-increasing");
    }
  }
}

Rational potential(const WeightedGraph& g, std::span<const int> s,
                   const PotentialCoefficients& coeffs) {
  coeffs.validate(2);
  VertexSet set = canonical_set(s);
  Rational total;
  for (int id = 0; id < g.edge_count(); ++id) {
    int mult = g.covered_multiplicity(set, id);
    total += coeffs.alpha[static_cast<std::size_t>(mult)] * g.edge(id).w;
  }
  return total;
}

Rational potential(const WeightedHypergraph& g, std::span<const int> s,
                   const PotentialCoefficients& coeffs) {
  coeffs.validate(g.eta());
  VertexSet set = canonical_set(s);
  Rational total;
  for (int id = 0; id < g.edge_count(); ++id) {
    int mult = g.covered_multiplicity(set, id);
    total += coeffs.alpha[static_cast<std::size_t>(mult)] * g.edge(id).w;
  }
  return total;
}

Rational exchange_gain(const WeightedGraph& g, const VertexSet& s, const VertexSet& remove,
                       const VertexSet& add, const PotentialCoefficients& coeffs) {
  VertexSet after = canonical_set(s);
  for (int v : remove) {
    if (!set_contains(after, v)) throw input_error("exchange removes a vertex not in the set");
    after = sorted_erase(after, v);
  }
  for (int v : add) {
    if (set_contains(after, v)) throw input_error("exchange adds a vertex already present");
    after = sorted_insert(after, v);
  }
  return potential(g, after, coeffs) - potential(g, s, coeffs);
}

bool improving_exchange_exists(const WeightedGraph& g, const IndependenceOracle& m,
                               const VertexSet& s, int p, const PotentialCoefficients& coeffs) {
  VertexSet base = canonical_set(s);
  VertexSet outside;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!set_contains(base, v)) outside.push_back(v);
  }
  PotentialState state(g, coeffs);
  for (int v : base) state.add(v);
  const Rational current = state.value();

  bool found = false;
  for (int a = 0; a <= p && !found; ++a) {
    for (int b = (a == 0 ? 1 : 0); b <= p && !found; ++b) {
      for_each_subset(base, a, [&](const VertexSet& removal) {
        if (found) return;
        for_each_subset(outside, b, [&](const VertexSet& addition) {
          if (found) return;
          VertexSet candidate = base;
          for (int v : removal) candidate = sorted_erase(candidate, v);
          for (int v : addition) candidate = sorted_insert(candidate, v);
          if (!m.is_independent(candidate)) return;
          if (current < potential(g, candidate, coeffs)) found = true;
        });
      });
    }
  }
  return found;
}

std::int64_t swap_count_bound(const Rational& eps) {
  if (eps.num() <= 0) throw input_error("swap_count_bound requires eps > 0");
  long double ratio = std::log(2.0L) / std::log1p(static_cast<long double>(eps.to_double()));
  return static_cast<std::int64_t>(std::ceil(ratio - 1e-9L));
}

VertexSet greedy_basis(const WeightedGraph& g, const IndependenceOracle& m,
                       const PotentialCoefficients& coeffs) {
  coeffs.validate(2);
  if (g.vertex_count() != m.ground_size()) {
    throw input_error("graph and matroid disagree on the vertex count");
  }
  PotentialState state(g, coeffs);
  VertexSet s;
  for (;;) {
    int best_vertex = -1;
    Rational best_gain;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (set_contains(s, v)) continue;
      if (!m.is_independent(sorted_insert(s, v))) continue;
      Rational gain = state.add_gain(v);
      if (best_vertex == -1 || best_gain < gain) {
        best_vertex = v;
        best_gain = gain;
      }
    }
    if (best_vertex == -1) break;
    state.add(best_vertex);
    s = sorted_insert(s, best_vertex);
  }
  return s;
}

SolveReport local_search(const WeightedGraph& g, const IndependenceOracle& m,
                         const Rational& eps, const PotentialCoefficients& coeffs) {
  if (eps.num() <= 0) throw input_error("local search requires eps > 0");
  coeffs.validate(2);
  PotentialState state(g, coeffs);
  VertexSet s = greedy_basis(g, m, coeffs);
  for (int v : s) state.add(v);

  SolveReport report;
  report.swap_count = run_swap_phase(g, m, eps, state, s);
  report.max_phase_swaps = report.swap_count;
  report.solution = std::move(s);
  report.value = g.coverage(report.solution);
  report.potential_value = state.value();
  report.epsilon = eps;
  report.alpha2 = coeffs.alpha2();
  return report;
}

Rational default_local_search_eps(int k) {
  if (k < 1) return Rational(1);
  return Rational(1, 9ll * k * k);
}

SolveReport contracted_search(const WeightedGraph& g, const IndependenceOracle& m) {
  const int k = rank(m);
  const Rational eps = default_local_search_eps(k);
  const PotentialCoefficients coeffs = PotentialCoefficients::for_graph(Rational(3, 2));

  SolveReport best;
  best.value = Rational(0);
  best.epsilon = eps;
  best.alpha2 = coeffs.alpha2();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!m.is_independent(VertexSet{v})) continue;
    WeightedGraph sub_graph = g.without_vertex_edges(v);
    ContractView sub_matroid(m, VertexSet{v});
    SolveReport sub = local_search(sub_graph, sub_matroid, eps, coeffs);
    VertexSet candidate = sorted_insert(sub.solution, v);
    Rational value = g.coverage(candidate);
    best.swap_count += sub.swap_count;
    best.max_phase_swaps = std::max(best.max_phase_swaps, sub.max_phase_swaps);
    if (best.value < value ||
        (value == best.value && lex_less(candidate, best.solution))) {
      best.value = value;
      best.solution = std::move(candidate);
      best.guessed_vertices = {v};
    }
  }
  best.potential_value = potential(g, best.solution, coeffs);
  return best;
}

SolveReport local_search_34(const WeightedGraph& g, const IndependenceOracle& m,
                            const Rational& eps, int rank_cap) {
  const int k = rank(m);
  if (k > rank_cap) {
    throw resource_error("rank " + std::to_string(k) + " exceeds the recursion cap " +
                         std::to_string(rank_cap));
  }
  if (eps.num() <= 0) throw input_error("local search requires eps > 0");
  const PotentialCoefficients coeffs = PotentialCoefficients::for_graph(Rational(5, 3));

  SolveReport best;
  best.value = Rational(0);
  best.epsilon = eps;
  best.alpha2 = coeffs.alpha2();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!m.is_independent(VertexSet{v})) continue;
    WeightedGraph sub_graph = g.without_vertex_edges(v);
    ContractView sub_matroid(m, VertexSet{v});
    BranchResult sub = ls34_recursive(sub_graph, sub_matroid, eps, coeffs);
    VertexSet candidate = sorted_insert(sub.solution, v);
    Rational value = g.coverage(candidate);
    best.swap_count += sub.swap_count;
    best.max_phase_swaps = std::max(best.max_phase_swaps, sub.max_phase_swaps);
    if (best.value < value ||
        (value == best.value && lex_less(candidate, best.solution))) {
      best.value = value;
      best.solution = std::move(candidate);
      best.guessed_vertices = {v};
    }
  }
  best.potential_value = potential(g, best.solution, coeffs);
  return best;
}

SolveReport local_search_34(const WeightedGraph& g, const IndependenceOracle& m, int rank_cap) {
  return local_search_34(g, m, default_local_search_eps(rank(m)), rank_cap);
}

namespace {

struct TwoMatroidPhase {
  VertexSet solution;
  std::int64_t swaps = 0;
};

// Greedy common independent set, then bounded exchanges at the (1+eps)
// improvement threshold; first improving exchange applied, scan restarts.
TwoMatroidPhase two_matroid_phase(const WeightedGraph& g, const IndependenceOracle& m,
                                  int p, const Rational& eps,
                                  const PotentialCoefficients& coeffs, std::int64_t budget,
                                  std::int64_t& spent) {
  TwoMatroidPhase phase;
  PotentialState state(g, coeffs);
  phase.solution = greedy_basis(g, m, coeffs);
  for (int v : phase.solution) state.add(v);

  const int n = g.vertex_count();
  bool improved = true;
  while (improved) {
    improved = false;
    Rational threshold = (Rational(1) + eps) * state.value();
    VertexSet outside;
    for (int v = 0; v < n; ++v) {
      if (!set_contains(phase.solution, v)) outside.push_back(v);
    }
    int remove_cap = std::min<int>(2 * p + 1, static_cast<int>(phase.solution.size()));
    int add_cap = std::min<int>(2 * p, static_cast<int>(outside.size()));
    for (int a = 0; a <= remove_cap && !improved; ++a) {
      for (int b = 0; b <= add_cap && !improved; ++b) {
        if (a == 0 && b == 0) continue;
        for_each_subset(phase.solution, a, [&](const VertexSet& removal) {
          if (improved) return;
          for_each_subset(outside, b, [&](const VertexSet& addition) {
            if (improved) return;
            if (++spent > budget) {
              throw resource_error("exchange budget exceeded: cap=" + std::to_string(budget));
            }
            VertexSet candidate = phase.solution;
            for (int v : removal) candidate = sorted_erase(candidate, v);
            for (int v : addition) candidate = sorted_insert(candidate, v);
            if (!m.is_independent(candidate)) return;
            if (!(threshold < potential(g, candidate, coeffs))) return;
            for (int v : removal) state.remove(v);
            for (int v : addition) state.add(v);
            phase.solution = std::move(candidate);
            ++phase.swaps;
            improved = true;
          });
        });
      }
    }
  }
  return phase;
}

}  // namespace

SolveReport two_matroid_search(const WeightedGraph& g, const IndependenceOracle& m1,
                               const IndependenceOracle& m2, int p, const Rational& eps,
                               std::int64_t budget) {
  if (p < 1) throw input_error("two_matroid_search requires p >= 1");
  if (eps.num() <= 0) throw input_error("local search requires eps > 0");
  const PotentialCoefficients coeffs = PotentialCoefficients::for_graph(Rational(3, 2));
  IntersectionView common(m1, m2);

  SolveReport best;
  best.value = Rational(0);
  best.epsilon = eps;
  best.alpha2 = coeffs.alpha2();
  std::int64_t spent = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!common.is_independent(VertexSet{v})) continue;
    WeightedGraph sub_graph = g.without_vertex_edges(v);
    ContractView c1(m1, VertexSet{v});
    ContractView c2(m2, VertexSet{v});
    IntersectionView sub_common(c1, c2);
    TwoMatroidPhase phase =
        two_matroid_phase(sub_graph, sub_common, p, eps, coeffs, budget, spent);
    VertexSet candidate = sorted_insert(phase.solution, v);
    Rational value = g.coverage(candidate);
    best.swap_count += phase.swaps;
    best.max_phase_swaps = std::max(best.max_phase_swaps, phase.swaps);
    if (best.value < value ||
        (value == best.value && lex_less(candidate, best.solution))) {
      best.value = value;
      best.solution = std::move(candidate);
      best.guessed_vertices = {v};
    }
  }
  best.potential_value = potential(g, best.solution, coeffs);
  return best;
}

SolveReport two_matroid_search(const WeightedGraph& g, const IndependenceOracle& m1,
                               const IndependenceOracle& m2, int p, std::int64_t budget) {
  int k = std::min(rank(m1), rank(m2));
  return two_matroid_search(g, m1, m2, p, default_local_search_eps(k), budget);
}

}  // namespace mcvc
