#include "mcvc/generators.hpp"

#include <algorithm>

#include "mcvc/errors.hpp"
#include "mcvc/rng.hpp"

namespace mcvc {
namespace {

void check_unit_interval(const Rational& eps) {
  if (eps.num() <= 0 || !(eps < Rational(1))) {
    throw input_error("eps must lie strictly between 0 and 1");
  }
}

Matroid random_matroid(MatroidKind kind, int n, int max_rank, Rng& rng) {
  const int cap = std::min(n, max_rank);
  switch (kind) {
    case MatroidKind::Uniform:
      return Matroid::uniform(n, rng.uniform_int(1, cap));
    case MatroidKind::Partition: {
      std::vector<int> vertices(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v;
      rng.shuffle(vertices);
      int part_count = rng.uniform_int(1, n);
      std::vector<Constraint> parts(static_cast<std::size_t>(part_count));
      for (int i = 0; i < n; ++i) {
        parts[static_cast<std::size_t>(i % part_count)].elements.push_back(
            vertices[static_cast<std::size_t>(i)]);
      }
      std::erase_if(parts, [](const Constraint& c) { return c.elements.empty(); });
      int remaining = std::max(1, cap);
      for (auto& part : parts) {
        int most = std::min<int>(static_cast<int>(part.elements.size()), remaining);
        part.bound = rng.uniform_int(0, most);
        remaining -= std::min<int>(part.bound, static_cast<int>(part.elements.size()));
      }
      // Guarantee rank at least 1.
      bool has_rank = std::any_of(parts.begin(), parts.end(),
                                  [](const Constraint& c) { return c.bound > 0; });
      if (!has_rank) parts.front().bound = 1;
      return Matroid::partition(n, std::move(parts));
    }
    case MatroidKind::Laminar: {
      std::vector<int> vertices(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v;
      rng.shuffle(vertices);
      std::vector<Constraint> sets;
      int root_bound = rng.uniform_int(1, std::max(1, cap));
      sets.push_back(Constraint{canonical_set(vertices), root_bound});
      // Random nested splits; every split keeps laminarity by construction.
      auto split = [&](auto&& self, std::size_t lo, std::size_t hi, int parent_bound) -> void {
        if (hi - lo < 2) return;
        std::size_t mid = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(lo) + 1, static_cast<std::int64_t>(hi) - 1));
        for (auto [a, b] : {std::make_pair(lo, mid), std::make_pair(mid, hi)}) {
          std::size_t len = b - a;
          int bound = rng.uniform_int(0, std::min<int>(parent_bound, static_cast<int>(len)));
          bool keep = len > 1 && rng.flip();
          if (keep) {
            VertexSet piece(vertices.begin() + static_cast<std::ptrdiff_t>(a),
                            vertices.begin() + static_cast<std::ptrdiff_t>(b));
            sets.push_back(Constraint{canonical_set(piece), bound});
            self(self, a, b, bound);
          } else {
            self(self, a, b, parent_bound);
          }
        }
      };
      split(split, 0, static_cast<std::size_t>(n), root_bound);
      return Matroid::laminar(n, std::move(sets));
    }
    case MatroidKind::Transversal: {
      int set_count = rng.uniform_int(1, std::max(1, cap));
      std::vector<VertexSet> sets(static_cast<std::size_t>(set_count));
      for (auto& set : sets) {
        for (int v = 0; v < n; ++v) {
          if (rng.flip()) set.push_back(v);
        }
        if (set.empty()) set.push_back(rng.uniform_int(0, n - 1));
      }
      return Matroid::transversal(n, std::move(sets));
    }
    case MatroidKind::Explicit: {
      if (n > 12) throw input_error("random explicit matroids are capped at ground size 12");
      Matroid seed_matroid = random_matroid(MatroidKind::Partition, n, max_rank, rng);
      int k = rank(seed_matroid);
      std::vector<VertexSet> bases;
      VertexSet current;
      auto enumerate = [&](auto&& self, int from) -> void {
        if (static_cast<int>(current.size()) == k) {
          bases.push_back(current);
          return;
        }
        for (int v = from; v < n; ++v) {
          current.push_back(v);
          if (seed_matroid.is_independent(current)) self(self, v + 1);
          current.pop_back();
        }
      };
      enumerate(enumerate, 0);
      return Matroid::explicit_bases(n, std::move(bases));
    }
  }
  throw internal_error("unknown matroid kind");
}

}  // namespace

Instance gen_fig3(const Rational& eps) {
  check_unit_interval(eps);
  std::vector<Edge> edges = {Edge{0, 1, Rational(2)}, Edge{2, 3, Rational(1) - eps}};
  return Instance{WeightedGraph(4, std::move(edges)), Matroid::uniform(4, 2)};
}

Instance gen_fig4(int k) {
  if (k < 2) throw input_error("gen_fig4 requires k >= 2");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      edges.push_back(Edge{i, k + j, Rational(1)});
    }
  }
  for (int i = 0; i < k; ++i) {
    edges.push_back(Edge{k + i, 2 * k + i, Rational(k, 2)});
  }
  return Instance{WeightedGraph(3 * k, std::move(edges)), Matroid::uniform(3 * k, k)};
}

Instance gen_fig6(int k, const Rational& eps) {
  if (k < 2) throw input_error("gen_fig6 requires k >= 2");
  check_unit_interval(eps);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      edges.push_back(Edge{i, k + j, Rational(1)});
    }
  }
  Rational pendant = Rational(k) * (Rational(1) - eps);
  for (int i = 0; i < k; ++i) {
    edges.push_back(Edge{k + i, 2 * k + i, pendant});
  }
  return Instance{WeightedGraph(3 * k, std::move(edges)), Matroid::uniform(3 * k, k)};
}

Instance gen_random(const RandomSpec& spec) {
  if (spec.n < 1) throw input_error("gen_random requires n >= 1");
  std::int64_t max_edges = static_cast<std::int64_t>(spec.n) * (spec.n - 1) / 2;
  if (spec.m_edges < 0 || spec.m_edges > max_edges) {
    throw input_error("m_edges exceeds n(n-1)/2");
  }
  if (spec.weight_min < 0 || spec.weight_max < spec.weight_min) {
    throw input_error("invalid weight range");
  }
  Rng rng(spec.seed);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(max_edges));
  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) pairs.emplace_back(u, v);
  }
  rng.shuffle(pairs);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.m_edges));
  for (int i = 0; i < spec.m_edges; ++i) {
    auto [u, v] = pairs[static_cast<std::size_t>(i)];
    edges.push_back(Edge{u, v, Rational(rng.uniform(spec.weight_min, spec.weight_max))});
  }

  int max_rank = spec.max_rank > 0 ? spec.max_rank : std::min(spec.n, 4);
  Matroid matroid = random_matroid(spec.kind, spec.n, max_rank, rng);
  return Instance{WeightedGraph(spec.n, std::move(edges)), std::move(matroid)};
}

WeightedHypergraph gen_random_hypergraph(int n, int m_edges, int eta, std::int64_t weight_min,
                                         std::int64_t weight_max, std::uint64_t seed) {
  if (n < 1) throw input_error("gen_random_hypergraph requires n >= 1");
  if (eta < 1) throw input_error("eta must be at least 1");
  if (m_edges < 0) throw input_error("negative edge count");
  if (weight_min < 0 || weight_max < weight_min) throw input_error("invalid weight range");
  Rng rng(seed);
  std::vector<HyperEdge> edges;
  edges.reserve(static_cast<std::size_t>(m_edges));
  for (int i = 0; i < m_edges; ++i) {
    int size = rng.uniform_int(1, std::min(eta, n));
    VertexSet vertices;
    while (static_cast<int>(vertices.size()) < size) {
      int v = rng.uniform_int(0, n - 1);
      if (!set_contains(vertices, v)) {
        vertices.insert(std::upper_bound(vertices.begin(), vertices.end(), v), v);
      }
    }
    edges.push_back(HyperEdge{std::move(vertices), Rational(rng.uniform(weight_min, weight_max))});
  }
  return WeightedHypergraph(n, std::move(edges), eta);
}

}  // namespace mcvc
