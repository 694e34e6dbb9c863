#include "mcvc/streaming.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "mcvc/errors.hpp"
#include "mcvc/rng.hpp"

namespace mcvc {
namespace {

void check_item(const StreamItem& item, int n) {
  if (item.u < 0 || item.u >= n || item.v < 0 || item.v >= n) {
    throw input_error("stream item has an endpoint out of range");
  }
  if (item.w.is_negative()) throw input_error("stream item has negative weight");
}

void check_stream_matroid(const EdgeStream& stream, const Matroid& m) {
  if (stream.vertex_count() != m.ground_size()) {
    throw input_error("stream and matroid disagree on the vertex count");
  }
  if (m.kind() == MatroidKind::Explicit) {
    throw unsupported_error("streaming handles uniform, partition, laminar and "
                            "transversal matroids only");
  }
}

int checked_stream_t(const Rational& eps) {
  if (eps.num() <= 0 || Rational(1) < eps) throw input_error("eps must lie in (0, 1]");
  return static_cast<int>(ceil_recip(eps));
}

Rational true_coverage(const std::vector<StreamItem>& items, const VertexSet& s, int n) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  Rational total;
  for (const StreamItem& item : items) {
    if (in[static_cast<std::size_t>(item.u)] || in[static_cast<std::size_t>(item.v)]) {
      total += item.w;
    }
  }
  return total;
}

}  // namespace

EdgeStream EdgeStream::edge_arrival(int n, std::vector<StreamItem> items, bool replayable) {
  if (n < 0) throw input_error("negative vertex count");
  EdgeStream s(StreamMode::EdgeArrival, n);
  for (const StreamItem& item : items) check_item(item, n);
  s.items_ = std::move(items);
  s.replayable_ = replayable;
  return s;
}

EdgeStream EdgeStream::incidence(int n, std::vector<IncidenceGroup> groups) {
  if (n < 0) throw input_error("negative vertex count");
  EdgeStream s(StreamMode::Incidence, n);
  for (const IncidenceGroup& group : groups) {
    if (group.vertex < 0 || group.vertex >= n) {
      throw input_error("incidence group vertex out of range");
    }
    for (const StreamItem& item : group.edges) check_item(item, n);
  }
  s.groups_ = std::move(groups);
  return s;
}

EdgeStream EdgeStream::edge_arrival_from_graph(const WeightedGraph& g) {
  std::vector<StreamItem> items;
  items.reserve(g.edges().size());
  for (const Edge& e : g.edges()) items.push_back(StreamItem{e.u, e.v, e.w});
  return edge_arrival(g.vertex_count(), std::move(items));
}

EdgeStream EdgeStream::shuffled_edge_arrival(const WeightedGraph& g, std::uint64_t seed) {
  std::vector<StreamItem> items;
  items.reserve(g.edges().size());
  for (const Edge& e : g.edges()) items.push_back(StreamItem{e.u, e.v, e.w});
  Rng rng(seed);
  rng.shuffle(items);
  return edge_arrival(g.vertex_count(), std::move(items));
}

namespace {

EdgeStream incidence_with_order(const WeightedGraph& g, const std::vector<int>& order) {
  std::vector<IncidenceGroup> groups;
  groups.reserve(order.size());
  for (int v : order) {
    IncidenceGroup group;
    group.vertex = v;
    for (int id : g.incident_edges(v)) {
      const Edge& e = g.edge(id);
      group.edges.push_back(StreamItem{v, e.u == v ? e.v : e.u, e.w});
    }
    groups.push_back(std::move(group));
  }
  return EdgeStream::incidence(g.vertex_count(), std::move(groups));
}

}  // namespace

EdgeStream EdgeStream::incidence_from_graph(const WeightedGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
  return incidence_with_order(g, order);
}

EdgeStream EdgeStream::shuffled_incidence(const WeightedGraph& g, std::uint64_t seed) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
  Rng rng(seed);
  rng.shuffle(order);
  return incidence_with_order(g, order);
}

const std::vector<StreamItem>& EdgeStream::items() const {
  if (mode_ != StreamMode::EdgeArrival) {
    throw contract_error("items() requires an edge-arrival stream");
  }
  return items_;
}

const std::vector<IncidenceGroup>& EdgeStream::groups() const {
  if (mode_ != StreamMode::Incidence) {
    throw contract_error("groups() requires an incidence stream");
  }
  return groups_;
}

StreamResult two_pass(const EdgeStream& stream, const Matroid& m, const Rational& eps,
                      std::int64_t budget) {
  if (stream.mode() != StreamMode::EdgeArrival) {
    throw contract_error("two_pass requires an edge-arrival stream");
  }
  if (!stream.replayable()) {
    throw contract_error("two_pass requires a replayable stream source");
  }
  check_stream_matroid(stream, m);
  const int n = stream.vertex_count();
  const int t = checked_stream_t(eps);
  const int tau = union_multiplier(m, t);

  // Pass 1: weighted degrees.
  std::vector<Rational> degw(static_cast<std::size_t>(n));
  for (const StreamItem& item : stream.items()) {
    degw[static_cast<std::size_t>(item.u)] += item.w;
    if (item.u != item.v) degw[static_cast<std::size_t>(item.v)] += item.w;
  }
  VertexSet kernel = greedy_kernel_vertices(degw, m, tau);

  // Pass 2: retain edges inside the kernel.
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : kernel) in[static_cast<std::size_t>(v)] = 1;
  std::vector<Edge> retained;
  for (const StreamItem& item : stream.items()) {
    if (in[static_cast<std::size_t>(item.u)] && in[static_cast<std::size_t>(item.v)]) {
      retained.push_back(Edge{item.u, item.v, item.w});
    }
  }

  StreamResult result;
  result.report = detail::maximize_by_degree_formula(degw, retained, kernel, m, budget);
  result.report.epsilon = eps;
  result.stats.peak_retained_edges = static_cast<std::int64_t>(retained.size());
  result.stats.peak_tracked_vertices = n;
  result.stats.passes = 2;
  result.kernel = std::move(kernel);
  return result;
}

StreamResult one_pass_edge_arrival(const EdgeStream& stream, const Matroid& m,
                                   const Rational& eps, std::int64_t budget) {
  if (stream.mode() != StreamMode::EdgeArrival) {
    throw contract_error("one_pass_edge_arrival requires an edge-arrival stream");
  }
  check_stream_matroid(stream, m);
  if (eps.num() <= 0 || Rational(1) < eps) throw input_error("eps must lie in (0, 1]");
  const int n = stream.vertex_count();
  const int k = rank(m);
  // ceil(2k/eps) heaviest edges per vertex.
  const std::int64_t heap_cap = std::max<std::int64_t>(1, ceil_recip(eps / Rational(2 * std::max(k, 1))));

  std::vector<Rational> degw(static_cast<std::size_t>(n));
  // Worst entry first: smallest weight, then latest arrival.
  struct HeapOrder {
    bool operator()(const std::pair<Rational, int>& a, const std::pair<Rational, int>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return a.second > b.second;
    }
  };
  std::vector<std::set<std::pair<Rational, int>, HeapOrder>> heaps(static_cast<std::size_t>(n));
  std::vector<int> refcount(stream.items().size(), 0);
  std::int64_t retained_now = 0;
  std::int64_t peak_retained = 0;

  auto heap_insert = [&](int v, const Rational& w, int pos) {
    auto& heap = heaps[static_cast<std::size_t>(v)];
    if (static_cast<std::int64_t>(heap.size()) < heap_cap) {
      heap.emplace(w, pos);
      if (refcount[static_cast<std::size_t>(pos)]++ == 0) ++retained_now;
      return;
    }
    auto worst = heap.begin();
    HeapOrder less;
    if (less(*worst, std::make_pair(w, pos))) {
      int evicted = worst->second;
      heap.erase(worst);
      if (--refcount[static_cast<std::size_t>(evicted)] == 0) --retained_now;
      heap.emplace(w, pos);
      if (refcount[static_cast<std::size_t>(pos)]++ == 0) ++retained_now;
    }
  };

  const auto& items = stream.items();
  for (std::size_t pos = 0; pos < items.size(); ++pos) {
    const StreamItem& item = items[pos];
    degw[static_cast<std::size_t>(item.u)] += item.w;
    if (item.u != item.v) degw[static_cast<std::size_t>(item.v)] += item.w;
    heap_insert(item.u, item.w, static_cast<int>(pos));
    if (item.u != item.v) heap_insert(item.v, item.w, static_cast<int>(pos));
    peak_retained = std::max(peak_retained, retained_now);
  }

  // Kernel for parameter eps/2.
  const int t = static_cast<int>(ceil_recip(eps / Rational(2)));
  const int tau = union_multiplier(m, t);
  VertexSet kernel = greedy_kernel_vertices(degw, m, tau);

  std::vector<Edge> retained;
  for (std::size_t pos = 0; pos < items.size(); ++pos) {
    if (refcount[pos] > 0) {
      retained.push_back(Edge{items[pos].u, items[pos].v, items[pos].w});
    }
  }

  StreamResult result;
  result.report = detail::maximize_by_degree_formula(degw, retained, kernel, m, budget);
  result.report.stream_estimate = result.report.value;
  result.report.value = true_coverage(items, result.report.solution, n);
  result.report.epsilon = eps;
  result.stats.peak_retained_edges = peak_retained;
  result.stats.peak_tracked_vertices = n;
  result.stats.passes = 1;
  result.kernel = std::move(kernel);
  return result;
}

StreamResult one_pass_incidence(const EdgeStream& stream, const Matroid& m,
                                const Rational& eps, std::int64_t budget) {
  if (stream.mode() != StreamMode::Incidence) {
    throw contract_error("one_pass_incidence requires an incidence stream");
  }
  check_stream_matroid(stream, m);
  const int n = stream.vertex_count();
  const int t = checked_stream_t(eps);
  const int tau = union_multiplier(m, t);
  const UnionView scaled(m, tau);

  // Grouping validation: one group per vertex, every item incident to its
  // group vertex, every non-loop edge delivered once from each side.
  std::vector<char> seen_group(static_cast<std::size_t>(n), 0);
  std::map<std::tuple<int, int, std::int64_t, std::int64_t>, std::pair<int, int>> balance;
  for (const IncidenceGroup& group : stream.groups()) {
    if (seen_group[static_cast<std::size_t>(group.vertex)]) {
      throw contract_error("stream not grouped by vertex: repeated group");
    }
    seen_group[static_cast<std::size_t>(group.vertex)] = 1;
    for (const StreamItem& item : group.edges) {
      if (item.u != group.vertex && item.v != group.vertex) {
        throw contract_error("stream not grouped by vertex: foreign edge in group");
      }
      if (item.u == item.v) continue;
      int lo = std::min(item.u, item.v);
      int hi = std::max(item.u, item.v);
      auto& sides = balance[std::make_tuple(lo, hi, item.w.num(), item.w.den())];
      (group.vertex == lo ? sides.first : sides.second) += 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen_group[static_cast<std::size_t>(v)]) {
      throw contract_error("stream not grouped by vertex: missing group for vertex " +
                           std::to_string(v));
    }
  }
  for (const auto& [key, sides] : balance) {
    if (sides.first != sides.second) {
      throw contract_error("stream not grouped by vertex: edge not delivered from both sides");
    }
  }

  std::vector<Rational> degw(static_cast<std::size_t>(n));
  std::vector<char> in_kernel(static_cast<std::size_t>(n), 0);
  VertexSet kernel;
  std::vector<Edge> retained;
  std::int64_t peak_retained = 0;
  std::int64_t peak_tracked = 0;

  auto drop_edges_of = [&](int v) {
    std::erase_if(retained, [v](const Edge& e) { return e.u == v || e.v == v; });
  };

  for (const IncidenceGroup& group : stream.groups()) {
    const int v = group.vertex;
    Rational deg;
    std::vector<Edge> buffered;
    for (const StreamItem& item : group.edges) {
      deg += item.w;
      int other = item.u == v ? item.v : item.u;
      if (other == v || in_kernel[static_cast<std::size_t>(other)]) {
        buffered.push_back(Edge{v, other, item.w});
      }
    }
    degw[static_cast<std::size_t>(v)] = deg;
    peak_retained = std::max(peak_retained,
                             static_cast<std::int64_t>(retained.size() + buffered.size()));
    peak_tracked = std::max(peak_tracked, static_cast<std::int64_t>(kernel.size()) + 1);

    VertexSet candidate = kernel;
    candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), v), v);
    if (scaled.is_independent(candidate)) {
      kernel = std::move(candidate);
      in_kernel[static_cast<std::size_t>(v)] = 1;
      retained.insert(retained.end(), buffered.begin(), buffered.end());
    } else {
      VertexSet circuit = find_circuit(scaled, candidate);
      if (circuit.empty()) {
        throw internal_error("incidence stream: dependent extension without a circuit");
      }
      // Lightest element, ties evict the larger index.
      int evict = circuit.front();
      for (int c : circuit) {
        const Rational& cw = degw[static_cast<std::size_t>(c)];
        const Rational& ew = degw[static_cast<std::size_t>(evict)];
        if (cw < ew || (cw == ew && c > evict)) evict = c;
      }
      if (evict != v) {
        kernel = std::move(candidate);
        kernel.erase(std::lower_bound(kernel.begin(), kernel.end(), evict));
        in_kernel[static_cast<std::size_t>(evict)] = 0;
        in_kernel[static_cast<std::size_t>(v)] = 1;
        retained.insert(retained.end(), buffered.begin(), buffered.end());
        drop_edges_of(evict);
      }
    }
    peak_retained = std::max(peak_retained, static_cast<std::int64_t>(retained.size()));
  }

  StreamResult result;
  result.report = detail::maximize_by_degree_formula(degw, retained, kernel, m, budget);
  result.report.epsilon = eps;
  result.stats.peak_retained_edges = peak_retained;
  result.stats.peak_tracked_vertices = peak_tracked;
  result.stats.passes = 1;
  result.kernel = std::move(kernel);
  return result;
}

}  // namespace mcvc
