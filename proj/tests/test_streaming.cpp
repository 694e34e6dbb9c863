#include <doctest.h>

#include <sstream>

#include "mcvc/errors.hpp"
#include "mcvc/exact.hpp"
#include "mcvc/generators.hpp"
#include "mcvc/io.hpp"
#include "mcvc/kernel.hpp"
#include "mcvc/streaming.hpp"
#include "support.hpp"

using mcvc::EdgeStream;
using mcvc::Matroid;
using mcvc::Rational;
using mcvc::VertexSet;

namespace {

mcvc::Instance random_instance(std::uint64_t seed, mcvc::MatroidKind kind) {
  mcvc::RandomSpec spec;
  spec.n = 10;
  spec.m_edges = 16;
  spec.kind = kind;
  spec.seed = seed;
  spec.max_rank = 3;
  return mcvc::gen_random(spec);
}

}  // namespace

TEST_CASE("two-pass equals the offline kernel solve") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    for (auto kind : {mcvc::MatroidKind::Uniform, mcvc::MatroidKind::Partition,
                      mcvc::MatroidKind::Laminar, mcvc::MatroidKind::Transversal}) {
      mcvc::Instance inst = random_instance(seed, kind);
      Rational eps(1, 2 + static_cast<int>(seed % 3));
      mcvc::KernelResult kres = mcvc::kernelize(inst.graph, inst.matroid, eps);
      mcvc::SolveReport offline = mcvc::kernel_opt(inst.graph, inst.matroid, kres);

      EdgeStream stream = EdgeStream::shuffled_edge_arrival(inst.graph, seed * 3);
      mcvc::StreamResult result = mcvc::two_pass(stream, inst.matroid, eps);
      CHECK(result.report.value == offline.value);
      CHECK(result.report.solution == offline.solution);
      CHECK(result.stats.passes == 2);
      CHECK(result.stats.peak_retained_edges <= kres.size_bound * kres.size_bound);
    }
  }
}

TEST_CASE("two-pass contract checks") {
  mcvc::Instance inst = mcvc::gen_fig3(Rational(1, 10));
  EdgeStream one_shot = EdgeStream::edge_arrival(
      4, {mcvc::StreamItem{0, 1, Rational(2)}}, /*replayable=*/false);
  CHECK_THROWS_AS(mcvc::two_pass(one_shot, inst.matroid, Rational(1, 2)),
                  mcvc::contract_error);
  EdgeStream incidence = EdgeStream::incidence_from_graph(inst.graph);
  CHECK_THROWS_AS(mcvc::two_pass(incidence, inst.matroid, Rational(1, 2)),
                  mcvc::contract_error);

  EdgeStream empty = EdgeStream::edge_arrival(4, {});
  CHECK(mcvc::two_pass(empty, inst.matroid, Rational(1, 2)).report.value == Rational(0));
}

TEST_CASE("one-pass edge arrival without truncation equals two-pass at eps/2") {
  // Max degree 3 is far below ceil(2k/eps) = 8, so nothing is dropped.
  mcvc::Instance inst = random_instance(4, mcvc::MatroidKind::Partition);
  Rational eps(1, 2);
  EdgeStream stream = EdgeStream::shuffled_edge_arrival(inst.graph, 9);
  mcvc::StreamResult one = mcvc::one_pass_edge_arrival(stream, inst.matroid, eps);
  mcvc::StreamResult two = mcvc::two_pass(stream, inst.matroid, eps / Rational(2));
  CHECK(one.report.value == two.report.value);
  CHECK(one.report.solution == two.report.solution);
  CHECK(*one.report.stream_estimate == one.report.value);
  CHECK(one.stats.passes == 1);
}

TEST_CASE("one-pass edge arrival quality and space") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    for (auto kind : {mcvc::MatroidKind::Uniform, mcvc::MatroidKind::Laminar}) {
      mcvc::Instance inst = random_instance(seed * 5, kind);
      Rational eps(1, 2);
      EdgeStream stream = EdgeStream::shuffled_edge_arrival(inst.graph, seed);
      mcvc::StreamResult result = mcvc::one_pass_edge_arrival(stream, inst.matroid, eps);
      mcvc::SolveReport opt = mcvc::brute_force_opt(inst.graph, inst.matroid);

      CHECK(result.report.value >= (Rational(1) - eps) * opt.value);
      CHECK(*result.report.stream_estimate >= result.report.value);
      CHECK(result.report.value == inst.graph.coverage(result.report.solution));
      // Truncated weight stays within the (eps/2) slice of the estimate.
      CHECK(*result.report.stream_estimate - result.report.value <=
            eps / Rational(2) * *result.report.stream_estimate);
      int k = mcvc::rank(inst.matroid);
      std::int64_t cap = mcvc::ceil_recip(eps / Rational(2 * k));
      CHECK(result.stats.peak_retained_edges <= inst.graph.vertex_count() * cap);
    }
  }
}

TEST_CASE("incidence stream reproduces the offline kernel for any order") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (auto kind : {mcvc::MatroidKind::Partition, mcvc::MatroidKind::Laminar,
                      mcvc::MatroidKind::Transversal}) {
      mcvc::Instance inst = random_instance(seed * 7, kind);
      Rational eps(1, 3);
      mcvc::KernelResult kres = mcvc::kernelize(inst.graph, inst.matroid, eps);
      mcvc::SolveReport offline = mcvc::kernel_opt(inst.graph, inst.matroid, kres);

      for (std::uint64_t shuffle = 0; shuffle < 6; ++shuffle) {
        EdgeStream stream = EdgeStream::shuffled_incidence(inst.graph, seed * 100 + shuffle);
        mcvc::StreamResult result = mcvc::one_pass_incidence(stream, inst.matroid, eps);
        CHECK(result.report.solution == offline.solution);
        CHECK(result.report.value == offline.value);
        std::int64_t bound = kres.size_bound;
        CHECK(result.stats.peak_retained_edges <= bound * bound + 2 * bound);
      }
    }
  }
}

TEST_CASE("incidence stream in degree order never evicts") {
  // Vertex 0 heaviest, descending: stream order = processing order of the
  // offline greedy, so the final set must match kernelize exactly.
  std::vector<mcvc::Edge> edges;
  for (int v = 1; v < 6; ++v) {
    edges.push_back(mcvc::Edge{0, v, Rational(6 - v)});
  }
  mcvc::WeightedGraph g(6, edges);
  Matroid m = Matroid::uniform(6, 1);
  Rational eps(1, 2);
  mcvc::KernelResult kres = mcvc::kernelize(g, m, eps);
  EdgeStream stream = EdgeStream::incidence_from_graph(g);
  mcvc::StreamResult result = mcvc::one_pass_incidence(stream, m, eps);
  mcvc::SolveReport offline = mcvc::kernel_opt(g, m, kres);
  CHECK(result.report.solution == offline.solution);
  CHECK(result.report.value == offline.value);
}

TEST_CASE("incidence grouping is validated") {
  mcvc::Instance inst = mcvc::gen_fig3(Rational(1, 10));
  // Edge (0,1) delivered only from one side.
  std::vector<mcvc::IncidenceGroup> groups(4);
  for (int v = 0; v < 4; ++v) groups[static_cast<std::size_t>(v)].vertex = v;
  groups[0].edges.push_back(mcvc::StreamItem{0, 1, Rational(2)});
  EdgeStream bad = EdgeStream::incidence(4, groups);
  CHECK_THROWS_AS(mcvc::one_pass_incidence(bad, inst.matroid, Rational(1, 2)),
                  mcvc::contract_error);

  EdgeStream arrival = EdgeStream::edge_arrival_from_graph(inst.graph);
  CHECK_THROWS_AS(mcvc::one_pass_incidence(arrival, inst.matroid, Rational(1, 2)),
                  mcvc::contract_error);
}

TEST_CASE("streaming determinism") {
  mcvc::Instance inst = random_instance(11, mcvc::MatroidKind::Laminar);
  EdgeStream stream = EdgeStream::shuffled_edge_arrival(inst.graph, 4);
  mcvc::StreamResult a = mcvc::one_pass_edge_arrival(stream, inst.matroid, Rational(1, 2));
  mcvc::StreamResult b = mcvc::one_pass_edge_arrival(stream, inst.matroid, Rational(1, 2));
  CHECK(a.report.solution == b.report.solution);
  CHECK(a.report.value == b.report.value);
  CHECK(a.stats.peak_retained_edges == b.stats.peak_retained_edges);
}

TEST_CASE("heavy-edge heaps keep earlier arrivals on weight ties") {
  // K4 with unit weights, k=1, eps=1: every vertex keeps its two earliest
  // incident edges. Only the last edge (2,3) misses both endpoint heaps.
  std::vector<mcvc::Edge> edges = {mcvc::Edge{0, 1, 1}, mcvc::Edge{0, 2, 1},
                                   mcvc::Edge{0, 3, 1}, mcvc::Edge{1, 2, 1},
                                   mcvc::Edge{1, 3, 1}, mcvc::Edge{2, 3, 1}};
  mcvc::WeightedGraph g(4, edges);
  Matroid m = Matroid::uniform(4, 1);
  EdgeStream stream = EdgeStream::edge_arrival_from_graph(g);
  mcvc::StreamResult result = mcvc::one_pass_edge_arrival(stream, m, Rational(1));
  CHECK(result.stats.peak_retained_edges == 5);
  CHECK(*result.report.stream_estimate >= result.report.value);
  CHECK(result.report.value == g.coverage(result.report.solution));
}

TEST_CASE("streams carry parallel edges and loops faithfully") {
  // Two parallel edges plus a loop; every executor must agree with the
  // offline kernel solve.
  std::vector<mcvc::Edge> edges = {mcvc::Edge{0, 1, Rational(1)},
                                   mcvc::Edge{0, 1, Rational(2)},
                                   mcvc::Edge{2, 2, Rational(5)},
                                   mcvc::Edge{1, 2, Rational(1)}};
  mcvc::WeightedGraph g(3, edges);
  CHECK(g.weighted_degree(0) == Rational(3));
  CHECK(g.weighted_degree(2) == Rational(6));
  Matroid m = Matroid::uniform(3, 1);
  Rational eps(1, 2);
  mcvc::KernelResult kres = mcvc::kernelize(g, m, eps);
  mcvc::SolveReport offline = mcvc::kernel_opt(g, m, kres);
  CHECK(offline.value == g.coverage(offline.solution));

  mcvc::StreamResult two =
      mcvc::two_pass(EdgeStream::edge_arrival_from_graph(g), m, eps);
  CHECK(two.report.value == offline.value);
  CHECK(two.report.solution == offline.solution);

  mcvc::StreamResult inc =
      mcvc::one_pass_incidence(EdgeStream::incidence_from_graph(g), m, eps);
  CHECK(inc.report.value == offline.value);
  CHECK(inc.kernel == kres.kernel_vertices);
}

TEST_CASE("stream file round trip") {
  mcvc::Instance inst = random_instance(13, mcvc::MatroidKind::Uniform);
  for (bool incidence : {false, true}) {
    EdgeStream stream = incidence ? EdgeStream::shuffled_incidence(inst.graph, 3)
                                  : EdgeStream::shuffled_edge_arrival(inst.graph, 3);
    std::ostringstream out;
    mcvc::write_stream(out, stream);
    std::istringstream in(out.str());
    EdgeStream parsed = mcvc::read_stream(in, "roundtrip");
    std::ostringstream again;
    mcvc::write_stream(again, parsed);
    CHECK(out.str() == again.str());
  }
}
