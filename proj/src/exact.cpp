#include "mcvc/exact.hpp"

#include <algorithm>
#include <string>

#include "mcvc/errors.hpp"

namespace mcvc {
namespace {

void bump_explored(std::int64_t& explored, std::int64_t budget) {
  if (++explored > budget) {
    throw resource_error("enumeration budget exceeded: cap=" + std::to_string(budget));
  }
}

// Generic DFS over independent subsets of `universe` in lexicographic order.
// `add`/`remove` maintain the objective incrementally; `value` reads it.
template <typename AddFn, typename RemoveFn, typename ValueFn>
SolveReport dfs_maximize(const VertexSet& universe, const IndependenceOracle& m,
                         std::int64_t budget, AddFn&& add, RemoveFn&& remove,
                         ValueFn&& value) {
  SolveReport best;
  best.value = Rational(0);
  std::int64_t explored = 0;
  bump_explored(explored, budget);  // the empty set

  VertexSet current;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < universe.size(); ++i) {
      int v = universe[i];
      current.push_back(v);
      if (m.is_independent(current)) {
        add(v);
        bump_explored(explored, budget);
        if (best.value < value()) {
          best.value = value();
          best.solution = current;
        }
        self(self, i + 1);
        remove(v);
      }
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  best.sets_explored = explored;
  return best;
}

}  // namespace

SolveReport brute_force_opt(const WeightedGraph& g, const IndependenceOracle& m,
                            std::int64_t budget) {
  if (g.vertex_count() != m.ground_size()) {
    throw input_error("graph and matroid disagree on the vertex count");
  }
  VertexSet universe(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) universe[static_cast<std::size_t>(v)] = v;

  std::vector<int> times_covered(static_cast<std::size_t>(g.edge_count()), 0);
  Rational covered;
  auto add = [&](int v) {
    for (int id : g.incident_edges(v)) {
      if (times_covered[static_cast<std::size_t>(id)]++ == 0) covered += g.edge(id).w;
    }
  };
  auto remove = [&](int v) {
    for (int id : g.incident_edges(v)) {
      if (--times_covered[static_cast<std::size_t>(id)] == 0) covered -= g.edge(id).w;
    }
  };
  return dfs_maximize(universe, m, budget, add, remove, [&] { return covered; });
}

SolveReport brute_force_opt(const WeightedHypergraph& g, const IndependenceOracle& m,
                            std::int64_t budget) {
  if (g.vertex_count() != m.ground_size()) {
    throw input_error("hypergraph and matroid disagree on the vertex count");
  }
  VertexSet universe(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) universe[static_cast<std::size_t>(v)] = v;

  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count()));
  for (int id = 0; id < g.edge_count(); ++id) {
    for (int v : g.edge(id).vertices) incident[static_cast<std::size_t>(v)].push_back(id);
  }
  std::vector<int> times_covered(static_cast<std::size_t>(g.edge_count()), 0);
  Rational covered;
  auto add = [&](int v) {
    for (int id : incident[static_cast<std::size_t>(v)]) {
      if (times_covered[static_cast<std::size_t>(id)]++ == 0) covered += g.edge(id).w;
    }
  };
  auto remove = [&](int v) {
    for (int id : incident[static_cast<std::size_t>(v)]) {
      if (--times_covered[static_cast<std::size_t>(id)] == 0) covered -= g.edge(id).w;
    }
  };
  return dfs_maximize(universe, m, budget, add, remove, [&] { return covered; });
}

namespace detail {

SolveReport maximize_by_degree_formula(const std::vector<Rational>& vertex_weight,
                                       const std::vector<Edge>& edges,
                                       const VertexSet& universe, const IndependenceOracle& m,
                                       std::int64_t budget) {
  const int n = static_cast<int>(vertex_weight.size());
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    if (e.is_loop()) continue;  // loops never double-count in the degree sum
    incident[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(id));
    incident[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(id));
  }

  std::vector<char> in(static_cast<std::size_t>(n), 0);
  Rational total;
  auto add = [&](int v) {
    total += vertex_weight[static_cast<std::size_t>(v)];
    for (int id : incident[static_cast<std::size_t>(v)]) {
      const Edge& e = edges[static_cast<std::size_t>(id)];
      int other = e.u == v ? e.v : e.u;
      if (in[static_cast<std::size_t>(other)]) total -= e.w;
    }
    in[static_cast<std::size_t>(v)] = 1;
  };
  auto remove = [&](int v) {
    in[static_cast<std::size_t>(v)] = 0;
    for (int id : incident[static_cast<std::size_t>(v)]) {
      const Edge& e = edges[static_cast<std::size_t>(id)];
      int other = e.u == v ? e.v : e.u;
      if (in[static_cast<std::size_t>(other)]) total += e.w;
    }
    total -= vertex_weight[static_cast<std::size_t>(v)];
  };
  return dfs_maximize(universe, m, budget, add, remove, [&] { return total; });
}

}  // namespace detail

SolveReport kernel_opt(const WeightedGraph& g, const Matroid& m, const KernelResult& kres,
                       std::int64_t budget) {
  if (g.vertex_count() != m.ground_size()) {
    throw input_error("graph and matroid disagree on the vertex count");
  }
  return detail::maximize_by_degree_formula(kres.degw, kres.retained_edges,
                                            kres.kernel_vertices, m, budget);
}

SolveReport kernel_opt(const WeightedHypergraph& g, const Matroid& m,
                       const HyperKernelResult& kres, std::int64_t budget) {
  if (g.vertex_count() != m.ground_size()) {
    throw input_error("hypergraph and matroid disagree on the vertex count");
  }
  // Per-vertex lists of subset_weights entries; an entry counts while at
  // least one of its vertices is present.
  std::vector<std::vector<int>> touching(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t id = 0; id < kres.subset_weights.size(); ++id) {
    for (int v : kres.subset_weights[id].first) {
      touching[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
    }
  }
  std::vector<int> hits(kres.subset_weights.size(), 0);
  Rational covered;
  auto add = [&](int v) {
    for (int id : touching[static_cast<std::size_t>(v)]) {
      if (hits[static_cast<std::size_t>(id)]++ == 0) {
        covered += kres.subset_weights[static_cast<std::size_t>(id)].second;
      }
    }
  };
  auto remove = [&](int v) {
    for (int id : touching[static_cast<std::size_t>(v)]) {
      if (--hits[static_cast<std::size_t>(id)] == 0) {
        covered -= kres.subset_weights[static_cast<std::size_t>(id)].second;
      }
    }
  };
  return dfs_maximize(kres.kernel_vertices, m, budget, add, remove, [&] { return covered; });
}

}  // namespace mcvc
