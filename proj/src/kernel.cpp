#include "mcvc/kernel.hpp"

#include <algorithm>
#include <map>

#include "matcher.hpp"
#include "mcvc/errors.hpp"

namespace mcvc {
namespace {

std::vector<int> greedy_order(const std::vector<Rational>& weights) {
  std::vector<int> order(weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[static_cast<std::size_t>(b)] < weights[static_cast<std::size_t>(a)];
  });
  return order;  // non-increasing weight, ties by ascending index
}

std::int64_t kernel_size_bound(const Matroid& m, int t) {
  std::int64_t k = rank(m);
  switch (m.kind()) {
    case MatroidKind::Uniform:
    case MatroidKind::Partition:
      return static_cast<std::int64_t>(t) * k;
    case MatroidKind::Laminar:
      return 2ll * t * k;
    case MatroidKind::Transversal:
      return (static_cast<std::int64_t>(t) + k - 1) * k;
    case MatroidKind::Explicit:
      break;
  }
  throw unsupported_error("kernelization handles uniform, partition, laminar and "
                          "transversal matroids only");
}

int checked_t(const Rational& eps) {
  if (eps.num() <= 0 || Rational(1) < eps) {
    throw input_error("eps must lie in (0, 1]");
  }
  return static_cast<int>(ceil_recip(eps));
}

}  // namespace

int union_multiplier(const Matroid& m, int t) {
  switch (m.kind()) {
    case MatroidKind::Uniform:
    case MatroidKind::Partition:
      return t;
    case MatroidKind::Laminar:
      return 2 * t;
    case MatroidKind::Transversal:
      return std::max(1, t + rank(m) - 1);  // rank 0 degenerates to an empty kernel
    case MatroidKind::Explicit:
      break;
  }
  throw unsupported_error("kernelization handles uniform, partition, laminar and "
                          "transversal matroids only");
}

VertexSet greedy_kernel_vertices(const std::vector<Rational>& weights, const Matroid& m,
                                 int multiplier) {
  if (static_cast<int>(weights.size()) != m.ground_size()) {
    throw input_error("weight vector does not match the matroid ground set");
  }
  const int n = m.ground_size();
  VertexSet kernel;

  switch (m.kind()) {
    case MatroidKind::Uniform: {
      long long cap = static_cast<long long>(multiplier) * m.uniform_rank();
      for (int v : greedy_order(weights)) {
        if (static_cast<long long>(kernel.size()) < cap) kernel.push_back(v);
      }
      break;
    }
    case MatroidKind::Partition:
    case MatroidKind::Laminar: {
      const auto& constraints =
          m.kind() == MatroidKind::Partition ? m.parts() : m.laminar_sets();
      std::vector<std::vector<int>> touching(static_cast<std::size_t>(n));
      for (std::size_t c = 0; c < constraints.size(); ++c) {
        for (int v : constraints[c].elements) {
          touching[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
        }
      }
      std::vector<long long> count(constraints.size(), 0);
      for (int v : greedy_order(weights)) {
        bool fits = true;
        for (int c : touching[static_cast<std::size_t>(v)]) {
          if (count[static_cast<std::size_t>(c)] + 1 >
              static_cast<long long>(multiplier) * constraints[static_cast<std::size_t>(c)].bound) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        for (int c : touching[static_cast<std::size_t>(v)]) {
          ++count[static_cast<std::size_t>(c)];
        }
        kernel.push_back(v);
      }
      break;
    }
    case MatroidKind::Transversal: {
      detail::CapacitatedMatcher matcher(m.transversal_sets(), n, multiplier);
      for (int v : greedy_order(weights)) {
        if (matcher.add(v)) kernel.push_back(v);
      }
      break;
    }
    case MatroidKind::Explicit:
      throw unsupported_error("kernelization handles uniform, partition, laminar and "
                              "transversal matroids only");
  }

  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

KernelResult kernelize(const WeightedGraph& g, const Matroid& m, const Rational& eps) {
  if (g.vertex_count() != m.ground_size()) {
    throw input_error("graph and matroid disagree on the vertex count");
  }
  KernelResult result;
  result.t = checked_t(eps);
  result.tau = union_multiplier(m, result.t);
  result.size_bound = kernel_size_bound(m, result.t);
  result.degw = g.weighted_degrees();
  result.kernel_vertices = greedy_kernel_vertices(result.degw, m, result.tau);
  if (static_cast<std::int64_t>(result.kernel_vertices.size()) > result.size_bound) {
    throw internal_error("kernel exceeds its size bound");
  }

  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : result.kernel_vertices) in[static_cast<std::size_t>(v)] = 1;
  for (const Edge& e : g.edges()) {
    bool u_in = in[static_cast<std::size_t>(e.u)];
    bool v_in = in[static_cast<std::size_t>(e.v)];
    if (u_in && v_in) {
      result.retained_edges.push_back(e);
    } else if (u_in) {
      result.retained_edges.push_back(Edge{e.u, e.u, e.w});
    } else if (v_in) {
      result.retained_edges.push_back(Edge{e.v, e.v, e.w});
    }
  }
  return result;
}

HyperKernelResult kernelize_hypergraph(const WeightedHypergraph& g, const Matroid& m,
                                       const Rational& eps) {
  if (g.vertex_count() != m.ground_size()) {
    throw input_error("hypergraph and matroid disagree on the vertex count");
  }
  HyperKernelResult result;
  result.t = checked_t(eps);
  result.tau = union_multiplier(m, result.t);
  result.size_bound = kernel_size_bound(m, result.t);
  result.degw = g.weighted_degrees();
  result.kernel_vertices = greedy_kernel_vertices(result.degw, m, result.tau);
  if (static_cast<std::int64_t>(result.kernel_vertices.size()) > result.size_bound) {
    throw internal_error("kernel exceeds its size bound");
  }

  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : result.kernel_vertices) in[static_cast<std::size_t>(v)] = 1;
  std::map<VertexSet, Rational> by_intersection;
  for (const HyperEdge& e : g.edges()) {
    VertexSet inside;
    for (int v : e.vertices) {
      if (in[static_cast<std::size_t>(v)]) inside.push_back(v);
    }
    if (inside.empty()) continue;
    by_intersection[inside] += e.w;
  }
  result.subset_weights.assign(by_intersection.begin(), by_intersection.end());
  return result;
}

}  // namespace mcvc
