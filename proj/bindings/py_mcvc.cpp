#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mcvc/errors.hpp"
#include "mcvc/exact.hpp"
#include "mcvc/generators.hpp"
#include "mcvc/io.hpp"
#include "mcvc/kernel.hpp"
#include "mcvc/laminar.hpp"
#include "mcvc/localsearch.hpp"
#include "mcvc/streaming.hpp"
#include "mcvc/suites.hpp"
#include "mcvc/witness.hpp"

namespace py = pybind11;
using namespace mcvc;

namespace {

Rational to_rational(py::handle value) {
  if (py::isinstance<Rational>(value)) return value.cast<Rational>();
  if (py::isinstance<py::int_>(value)) return Rational(value.cast<std::int64_t>());
  if (py::isinstance<py::str>(value)) return Rational::parse(value.cast<std::string>());
  if (py::isinstance<py::tuple>(value)) {
    auto pair = value.cast<std::pair<std::int64_t, std::int64_t>>();
    return Rational(pair.first, pair.second);
  }
  // fractions.Fraction and anything else with numerator/denominator.
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    return Rational(value.attr("numerator").cast<std::int64_t>(),
                    value.attr("denominator").cast<std::int64_t>());
  }
  throw input_error("cannot convert value to an exact rational; pass int, str, "
                    "(num, den) or fractions.Fraction");
}

std::vector<Edge> to_edges(const py::iterable& edges) {
  std::vector<Edge> out;
  for (py::handle item : edges) {
    auto tuple = py::cast<py::tuple>(item);
    if (tuple.size() != 3) throw input_error("edges are (u, v, w) triples");
    out.push_back(Edge{tuple[0].cast<int>(), tuple[1].cast<int>(), to_rational(tuple[2])});
  }
  return out;
}

std::vector<HyperEdge> to_hyperedges(const py::iterable& edges) {
  std::vector<HyperEdge> out;
  for (py::handle item : edges) {
    auto tuple = py::cast<py::tuple>(item);
    if (tuple.size() != 2) throw input_error("hyperedges are (vertices, w) pairs");
    out.push_back(HyperEdge{tuple[0].cast<VertexSet>(), to_rational(tuple[1])});
  }
  return out;
}

PotentialCoefficients coeffs_from(py::handle alpha2) {
  return PotentialCoefficients::for_graph(to_rational(alpha2));
}

template <typename T>
std::string via_stream(const T& value, void (*writer)(std::ostream&, const T&)) {
  std::ostringstream out;
  writer(out, value);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_mcvc, m) {
  m.doc() = "Maximum vertex cover under matroid constraints: kernelization, "
            "streaming executors and non-oblivious local search";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<unsupported_error>(m, "UnsupportedError", PyExc_NotImplementedError);
  py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<contract_error>(m, "ContractError", PyExc_ValueError);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](py::handle value) { return to_rational(value); }))
      .def(py::init([](std::int64_t num, std::int64_t den) { return Rational(num, den); }))
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def("__float__", &Rational::to_double)
      .def("__str__", &Rational::to_string)
      .def("__repr__", [](const Rational& r) { return "Rational(" + r.to_string() + ")"; })
      .def("__hash__",
           [](const Rational& r) { return py::hash(py::make_tuple(r.num(), r.den())); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);
  m.def("rational", &to_rational, "Convert int/str/tuple/Fraction to an exact Rational");

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init(
               [](int n, const py::iterable& edges) { return WeightedGraph(n, to_edges(edges)); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &WeightedGraph::vertex_count)
      .def_property_readonly("m", &WeightedGraph::edge_count)
      .def("edges",
           [](const WeightedGraph& g) {
             py::list out;
             for (const Edge& e : g.edges()) out.append(py::make_tuple(e.u, e.v, e.w));
             return out;
           })
      .def("weighted_degree", &WeightedGraph::weighted_degree)
      .def("coverage", [](const WeightedGraph& g, const VertexSet& s) { return g.coverage(s); })
      .def("covered_multiplicity",
           [](const WeightedGraph& g, const VertexSet& s, int edge_id) {
             return g.covered_multiplicity(s, edge_id);
           })
      .def("without_vertex_edges", &WeightedGraph::without_vertex_edges);

  py::class_<WeightedHypergraph>(m, "WeightedHypergraph")
      .def(py::init([](int n, const py::iterable& edges, int eta) {
             return WeightedHypergraph(n, to_hyperedges(edges), eta);
           }),
           py::arg("n"), py::arg("edges"), py::arg("eta"))
      .def_property_readonly("n", &WeightedHypergraph::vertex_count)
      .def_property_readonly("m", &WeightedHypergraph::edge_count)
      .def_property_readonly("eta", &WeightedHypergraph::eta)
      .def("weighted_degree", &WeightedHypergraph::weighted_degree)
      .def("coverage",
           [](const WeightedHypergraph& g, const VertexSet& s) { return g.coverage(s); })
      .def("covered_multiplicity", [](const WeightedHypergraph& g, const VertexSet& s,
                                      int edge_id) { return g.covered_multiplicity(s, edge_id); });

  py::enum_<MatroidKind>(m, "MatroidKind")
      .value("UNIFORM", MatroidKind::Uniform)
      .value("PARTITION", MatroidKind::Partition)
      .value("LAMINAR", MatroidKind::Laminar)
      .value("TRANSVERSAL", MatroidKind::Transversal)
      .value("EXPLICIT", MatroidKind::Explicit);

  py::class_<IndependenceOracle>(m, "IndependenceOracle")
      .def("ground_size", &IndependenceOracle::ground_size)
      .def("is_independent",
           [](const IndependenceOracle& o, const VertexSet& s) { return o.is_independent(s); });

  py::class_<Matroid, IndependenceOracle>(m, "Matroid")
      .def_static("uniform", &Matroid::uniform, py::arg("n"), py::arg("k"))
      .def_static(
          "partition",
          [](int n, const std::vector<std::pair<VertexSet, int>>& parts) {
            std::vector<Constraint> cs;
            for (const auto& [elements, bound] : parts) cs.push_back(Constraint{elements, bound});
            return Matroid::partition(n, std::move(cs));
          },
          py::arg("n"), py::arg("parts"))
      .def_static(
          "laminar",
          [](int n, const std::vector<std::pair<VertexSet, int>>& sets) {
            std::vector<Constraint> cs;
            for (const auto& [elements, bound] : sets) cs.push_back(Constraint{elements, bound});
            return Matroid::laminar(n, std::move(cs));
          },
          py::arg("n"), py::arg("sets"))
      .def_static("transversal", &Matroid::transversal, py::arg("n"), py::arg("sets"))
      .def_static("explicit_bases", &Matroid::explicit_bases, py::arg("n"), py::arg("bases"))
      .def_property_readonly("kind", &Matroid::kind);

  py::class_<UnionView, IndependenceOracle>(m, "UnionView")
      .def(py::init<const Matroid&, int>(), py::arg("base"), py::arg("multiplier"),
           py::keep_alive<1, 2>());
  py::class_<ContractView, IndependenceOracle>(m, "ContractView")
      .def(py::init<const IndependenceOracle&, VertexSet>(), py::arg("base"),
           py::arg("contracted"), py::keep_alive<1, 2>());
  py::class_<IntersectionView, IndependenceOracle>(m, "IntersectionView")
      .def(py::init<const IndependenceOracle&, const IndependenceOracle&>(), py::arg("first"),
           py::arg("second"), py::keep_alive<1, 2>(), py::keep_alive<1, 3>());

  m.def("rank", &rank);
  m.def("find_circuit",
        [](const IndependenceOracle& o, const VertexSet& s) { return find_circuit(o, s); });

  py::class_<LaminarNode>(m, "LaminarNode")
      .def_readonly("elements", &LaminarNode::elements)
      .def_readonly("bound", &LaminarNode::bound)
      .def_readonly("parent", &LaminarNode::parent)
      .def_readonly("left", &LaminarNode::left)
      .def_readonly("right", &LaminarNode::right)
      .def_readonly("depth", &LaminarNode::depth);
  py::class_<LaminarTree>(m, "LaminarTree")
      .def("node_count", &LaminarTree::node_count)
      .def("node", &LaminarTree::node, py::return_value_policy::reference_internal)
      .def("leaf_of", &LaminarTree::leaf_of)
      .def("path_to_root", &LaminarTree::path_to_root);
  m.def("build_laminar_tree", &build_laminar_tree);

  py::class_<KernelResult>(m, "KernelResult")
      .def_readonly("kernel_vertices", &KernelResult::kernel_vertices)
      .def_readonly("tau", &KernelResult::tau)
      .def_readonly("t", &KernelResult::t)
      .def_readonly("size_bound", &KernelResult::size_bound)
      .def_readonly("degw", &KernelResult::degw)
      .def("retained_edges", [](const KernelResult& k) {
        py::list out;
        for (const Edge& e : k.retained_edges) out.append(py::make_tuple(e.u, e.v, e.w));
        return out;
      });
  py::class_<HyperKernelResult>(m, "HyperKernelResult")
      .def_readonly("kernel_vertices", &HyperKernelResult::kernel_vertices)
      .def_readonly("tau", &HyperKernelResult::tau)
      .def_readonly("t", &HyperKernelResult::t)
      .def_readonly("size_bound", &HyperKernelResult::size_bound)
      .def_readonly("subset_weights", &HyperKernelResult::subset_weights);

  m.def(
      "kernelize",
      [](const WeightedGraph& g, const Matroid& matroid, py::handle eps) {
        return kernelize(g, matroid, to_rational(eps));
      },
      py::arg("graph"), py::arg("matroid"), py::arg("eps"));
  m.def(
      "kernelize_hypergraph",
      [](const WeightedHypergraph& g, const Matroid& matroid, py::handle eps) {
        return kernelize_hypergraph(g, matroid, to_rational(eps));
      },
      py::arg("hypergraph"), py::arg("matroid"), py::arg("eps"));

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("solution", &SolveReport::solution)
      .def_readonly("value", &SolveReport::value)
      .def_readonly("potential_value", &SolveReport::potential_value)
      .def_readonly("swap_count", &SolveReport::swap_count)
      .def_readonly("max_phase_swaps", &SolveReport::max_phase_swaps)
      .def_readonly("sets_explored", &SolveReport::sets_explored)
      .def_readonly("guessed_vertices", &SolveReport::guessed_vertices)
      .def_readonly("epsilon", &SolveReport::epsilon)
      .def_readonly("alpha2", &SolveReport::alpha2)
      .def_readonly("stream_estimate", &SolveReport::stream_estimate)
      .def("__repr__", [](const SolveReport& r) {
        return "SolveReport(value=" + r.value.to_string() +
               ", solution=" + vertex_set_to_string(r.solution) + ")";
      });

  m.def(
      "brute_force_opt",
      [](const WeightedGraph& g, const IndependenceOracle& o, std::int64_t budget) {
        return brute_force_opt(g, o, budget);
      },
      py::arg("graph"), py::arg("matroid"), py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "brute_force_opt_hypergraph",
      [](const WeightedHypergraph& g, const IndependenceOracle& o, std::int64_t budget) {
        return brute_force_opt(g, o, budget);
      },
      py::arg("hypergraph"), py::arg("matroid"), py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "kernel_opt",
      [](const WeightedGraph& g, const Matroid& matroid, const KernelResult& kres,
         std::int64_t budget) { return kernel_opt(g, matroid, kres, budget); },
      py::arg("graph"), py::arg("matroid"), py::arg("kernel"),
      py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "kernel_opt_hypergraph",
      [](const WeightedHypergraph& g, const Matroid& matroid, const HyperKernelResult& kres,
         std::int64_t budget) { return kernel_opt(g, matroid, kres, budget); },
      py::arg("hypergraph"), py::arg("matroid"), py::arg("kernel"),
      py::arg("budget") = kDefaultEnumerationBudget);

  m.def(
      "potential",
      [](const WeightedGraph& g, const VertexSet& s, py::handle alpha2) {
        return potential(g, s, coeffs_from(alpha2));
      },
      py::arg("graph"), py::arg("s"), py::arg("alpha2"));
  m.def(
      "greedy_basis",
      [](const WeightedGraph& g, const IndependenceOracle& o, py::handle alpha2) {
        return greedy_basis(g, o, coeffs_from(alpha2));
      },
      py::arg("graph"), py::arg("matroid"), py::arg("alpha2"));
  m.def(
      "local_search",
      [](const WeightedGraph& g, const IndependenceOracle& o, py::handle eps, py::handle alpha2) {
        return local_search(g, o, to_rational(eps), coeffs_from(alpha2));
      },
      py::arg("graph"), py::arg("matroid"), py::arg("eps"), py::arg("alpha2"));
  m.def(
      "contracted_search",
      [](const WeightedGraph& g, const IndependenceOracle& o) { return contracted_search(g, o); },
      py::arg("graph"), py::arg("matroid"));
  m.def(
      "local_search_34",
      [](const WeightedGraph& g, const IndependenceOracle& o, py::object eps, int rank_cap) {
        if (eps.is_none()) return local_search_34(g, o, rank_cap);
        return local_search_34(g, o, to_rational(eps), rank_cap);
      },
      py::arg("graph"), py::arg("matroid"), py::arg("eps") = py::none(), py::arg("rank_cap") = 8);
  m.def(
      "two_matroid_search",
      [](const WeightedGraph& g, const IndependenceOracle& m1, const IndependenceOracle& m2,
         int p, py::object eps, std::int64_t budget) {
        if (eps.is_none()) return two_matroid_search(g, m1, m2, p, budget);
        return two_matroid_search(g, m1, m2, p, to_rational(eps), budget);
      },
      py::arg("graph"), py::arg("m1"), py::arg("m2"), py::arg("p"), py::arg("eps") = py::none(),
      py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "exchange_gain",
      [](const WeightedGraph& g, const VertexSet& s, const VertexSet& remove,
         const VertexSet& add, py::handle alpha2) {
        return exchange_gain(g, s, remove, add, coeffs_from(alpha2));
      },
      py::arg("graph"), py::arg("s"), py::arg("remove"), py::arg("add"), py::arg("alpha2"));
  m.def(
      "improving_exchange_exists",
      [](const WeightedGraph& g, const IndependenceOracle& o, const VertexSet& s, int p,
         py::handle alpha2) { return improving_exchange_exists(g, o, s, p, coeffs_from(alpha2)); },
      py::arg("graph"), py::arg("matroid"), py::arg("s"), py::arg("p"), py::arg("alpha2"));
  m.def(
      "swap_count_bound", [](py::handle eps) { return swap_count_bound(to_rational(eps)); },
      py::arg("eps"));
  m.def("default_local_search_eps", &default_local_search_eps, py::arg("k"));

  py::class_<RobustWitness>(m, "RobustWitness")
      .def_readonly("base_set", &RobustWitness::base_set)
      .def_readonly("replacements", &RobustWitness::replacements);
  m.def("build_robust_witness", &build_robust_witness, py::arg("graph"), py::arg("matroid"),
        py::arg("kernel"), py::arg("o"));
  m.def("laminar_robust_witness", &laminar_robust_witness, py::arg("graph"), py::arg("matroid"),
        py::arg("kernel"), py::arg("o"));
  m.def("witness_valid", &witness_valid, py::arg("matroid"), py::arg("kernel"), py::arg("o"),
        py::arg("witness"), py::arg("exhaustive_cap") = 10'000, py::arg("sample_count") = 200,
        py::arg("seed") = 1);
  m.def("verify_robustness", &verify_robustness, py::arg("graph"), py::arg("matroid"),
        py::arg("kernel"), py::arg("o"));

  py::enum_<StreamMode>(m, "StreamMode")
      .value("EDGE_ARRIVAL", StreamMode::EdgeArrival)
      .value("INCIDENCE", StreamMode::Incidence);
  py::class_<StreamStats>(m, "StreamStats")
      .def_readonly("peak_retained_edges", &StreamStats::peak_retained_edges)
      .def_readonly("peak_tracked_vertices", &StreamStats::peak_tracked_vertices)
      .def_readonly("passes", &StreamStats::passes);
  py::class_<StreamResult>(m, "StreamResult")
      .def_readonly("report", &StreamResult::report)
      .def_readonly("stats", &StreamResult::stats)
      .def_readonly("kernel", &StreamResult::kernel);
  py::class_<EdgeStream>(m, "EdgeStream")
      .def_static("edge_arrival_from_graph", &EdgeStream::edge_arrival_from_graph)
      .def_static("shuffled_edge_arrival", &EdgeStream::shuffled_edge_arrival)
      .def_static("incidence_from_graph", &EdgeStream::incidence_from_graph)
      .def_static("shuffled_incidence", &EdgeStream::shuffled_incidence)
      .def_property_readonly("mode", &EdgeStream::mode)
      .def_property_readonly("n", &EdgeStream::vertex_count);
  m.def(
      "two_pass",
      [](const EdgeStream& s, const Matroid& matroid, py::handle eps, std::int64_t budget) {
        return two_pass(s, matroid, to_rational(eps), budget);
      },
      py::arg("stream"), py::arg("matroid"), py::arg("eps"),
      py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "one_pass_edge_arrival",
      [](const EdgeStream& s, const Matroid& matroid, py::handle eps, std::int64_t budget) {
        return one_pass_edge_arrival(s, matroid, to_rational(eps), budget);
      },
      py::arg("stream"), py::arg("matroid"), py::arg("eps"),
      py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "one_pass_incidence",
      [](const EdgeStream& s, const Matroid& matroid, py::handle eps, std::int64_t budget) {
        return one_pass_incidence(s, matroid, to_rational(eps), budget);
      },
      py::arg("stream"), py::arg("matroid"), py::arg("eps"),
      py::arg("budget") = kDefaultEnumerationBudget);

  py::class_<Instance>(m, "Instance")
      .def_readonly("graph", &Instance::graph)
      .def_readonly("matroid", &Instance::matroid);
  m.def(
      "gen_fig3", [](py::handle eps) { return gen_fig3(to_rational(eps)); }, py::arg("eps"));
  m.def("gen_fig4", &gen_fig4, py::arg("k"));
  m.def(
      "gen_fig6", [](int k, py::handle eps) { return gen_fig6(k, to_rational(eps)); },
      py::arg("k"), py::arg("eps"));
  m.def(
      "gen_random",
      [](int n, int m_edges, std::int64_t weight_min, std::int64_t weight_max, MatroidKind kind,
         std::uint64_t seed, int max_rank) {
        RandomSpec spec;
        spec.n = n;
        spec.m_edges = m_edges;
        spec.weight_min = weight_min;
        spec.weight_max = weight_max;
        spec.kind = kind;
        spec.seed = seed;
        spec.max_rank = max_rank;
        return gen_random(spec);
      },
      py::arg("n"), py::arg("m_edges"), py::arg("weight_min") = 1, py::arg("weight_max") = 10,
      py::arg("kind") = MatroidKind::Uniform, py::arg("seed") = 1, py::arg("max_rank") = 0);
  m.def("gen_random_hypergraph", &gen_random_hypergraph, py::arg("n"), py::arg("m_edges"),
        py::arg("eta"), py::arg("weight_min") = 1, py::arg("weight_max") = 10,
        py::arg("seed") = 1);

  m.def("read_graph_file", &read_graph_file);
  m.def("read_hypergraph_file", &read_hypergraph_file);
  m.def("read_matroid_file", &read_matroid_file);
  m.def("read_stream_file", &read_stream_file);
  m.def("graph_to_text", [](const WeightedGraph& g) { return via_stream(g, write_graph); });
  m.def("matroid_to_text", [](const Matroid& mm) { return via_stream(mm, write_matroid); });

  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("trials", &SuiteResult::trials)
      .def_readonly("failures", &SuiteResult::failures)
      .def_readonly("messages", &SuiteResult::messages);
  m.def("run_suite", &run_suite, py::arg("name"), py::arg("trials"), py::arg("seed") = 1,
        py::arg("jobs") = 1, py::arg("dump_prefix") = "counterexample");

  m.attr("DEFAULT_ENUMERATION_BUDGET") = kDefaultEnumerationBudget;
}
