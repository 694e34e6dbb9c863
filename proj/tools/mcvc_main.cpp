// Command-line front end: parse instances, run the solvers, generate the
// tightness families and drive the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mcvc/errors.hpp"
#include "mcvc/exact.hpp"
#include "mcvc/generators.hpp"
#include "mcvc/io.hpp"
#include "mcvc/kernel.hpp"
#include "mcvc/laminar.hpp"
#include "mcvc/localsearch.hpp"
#include "mcvc/report.hpp"
#include "mcvc/streaming.hpp"
#include "mcvc/suites.hpp"
#include "mcvc/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBudget = 4;

std::int64_t default_budget() {
  if (const char* env = std::getenv("MCVC_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw mcvc::input_error("MCVC_BUDGET is not an integer");
    }
  }
  return mcvc::kDefaultEnumerationBudget;
}

mcvc::Rational parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return mcvc::Rational::parse(text);
  } catch (const mcvc::input_error& e) {
    throw mcvc::input_error(std::string(flag) + ": " + e.what());
  }
}

void print_flags_header(const std::vector<std::pair<std::string, std::string>>& flags) {
  std::cout << "flags:";
  for (const auto& [key, value] : flags) std::cout << " " << key << "=" << value;
  std::cout << "\n";
}

void print_report(const mcvc::SolveReport& report, const std::string& algo) {
  std::cout << "algo: " << algo << "\n";
  std::cout << "value: " << report.value << "\n";
  std::cout << "value_decimal: " << report.value.to_double() << "\n";
  std::cout << "solution: " << mcvc::vertex_set_to_string(report.solution) << "\n";
  std::cout << "solution_size: " << report.solution.size() << "\n";
  if (report.potential_value) std::cout << "potential: " << *report.potential_value << "\n";
  if (report.epsilon) std::cout << "eps: " << *report.epsilon << "\n";
  if (report.alpha2) std::cout << "alpha2: " << *report.alpha2 << "\n";
  if (report.stream_estimate) std::cout << "stream_estimate: " << *report.stream_estimate << "\n";
  std::cout << "swap_count: " << report.swap_count << "\n";
  std::cout << "max_phase_swaps: " << report.max_phase_swaps << "\n";
  std::cout << "sets_explored: " << report.sets_explored << "\n";
  if (!report.guessed_vertices.empty()) {
    std::cout << "guessed: " << mcvc::vertex_set_to_string(report.guessed_vertices) << "\n";
  }
}

std::string csv_row(const mcvc::SolveReport& report, const std::string& algo) {
  std::ostringstream out;
  out << algo << "," << report.value.to_string() << "," << report.value.to_double() << ","
      << mcvc::vertex_set_to_string(report.solution) << "," << report.swap_count << ","
      << report.max_phase_swaps << "," << report.sets_explored;
  return out.str();
}

struct SolveOptions {
  std::string graph_file;
  std::string matroid_file;
  std::string matroid2_file;
  std::string algo;
  std::string eps_text = "";
  std::string alpha2_text = "";
  int p = 1;
  std::uint64_t seed = 1;
  bool oracle = false;
  bool csv = false;
};

int run_solve(const SolveOptions& opt) {
  if (opt.algo == "2matroid") {
    if (opt.matroid2_file.empty()) {
      throw mcvc::input_error("--algo 2matroid requires --matroid2-file");
    }
  } else if (!opt.matroid2_file.empty()) {
    throw mcvc::input_error("--matroid2-file is only valid with --algo 2matroid");
  }
  bool is_stream_algo =
      opt.algo == "stream2p" || opt.algo == "stream1p" || opt.algo == "streaminc";

  std::optional<mcvc::WeightedGraph> graph;
  std::optional<mcvc::WeightedHypergraph> hypergraph;
  std::optional<mcvc::EdgeStream> stream;
  switch (mcvc::sniff_file_type(opt.graph_file)) {
    case mcvc::InstanceFileType::Stream:
      if (!is_stream_algo) {
        throw mcvc::input_error("stream input files work with streaming algorithms only");
      }
      stream = mcvc::read_stream_file(opt.graph_file);
      break;
    case mcvc::InstanceFileType::Hypergraph:
      if (opt.algo != "bf" && opt.algo != "kernel-bf") {
        throw mcvc::input_error("hypergraph inputs support --algo bf and kernel-bf only");
      }
      hypergraph = mcvc::read_hypergraph_file(opt.graph_file);
      break;
    default:
      graph = mcvc::read_graph_file(opt.graph_file);
      break;
  }
  mcvc::Matroid matroid = mcvc::read_matroid_file(opt.matroid_file);
  const std::int64_t budget = default_budget();

  int k = mcvc::rank(matroid);
  mcvc::Rational eps = opt.eps_text.empty() ? mcvc::default_local_search_eps(k)
                                            : parse_rational_flag(opt.eps_text, "--eps");
  mcvc::Rational alpha2 = opt.alpha2_text.empty()
                              ? mcvc::Rational(3, 2)
                              : parse_rational_flag(opt.alpha2_text, "--alpha2");

  std::vector<std::pair<std::string, std::string>> flags = {
      {"graph", opt.graph_file}, {"matroid", opt.matroid_file}, {"algo", opt.algo},
      {"eps", eps.to_string()},  {"alpha2", alpha2.to_string()}, {"p", std::to_string(opt.p)},
      {"seed", std::to_string(opt.seed)}, {"budget", std::to_string(budget)}};
  if (!opt.matroid2_file.empty()) flags.emplace_back("matroid2", opt.matroid2_file);
  print_flags_header(flags);

  mcvc::SolveReport report;
  mcvc::StreamStats stats;
  bool have_stats = false;

  if (opt.algo == "bf") {
    report = hypergraph ? mcvc::brute_force_opt(*hypergraph, matroid, budget)
                        : mcvc::brute_force_opt(*graph, matroid, budget);
  } else if (opt.algo == "kernel-bf") {
    if (hypergraph) {
      mcvc::HyperKernelResult kres = mcvc::kernelize_hypergraph(*hypergraph, matroid, eps);
      report = mcvc::kernel_opt(*hypergraph, matroid, kres, budget);
    } else {
      mcvc::KernelResult kres = mcvc::kernelize(*graph, matroid, eps);
      report = mcvc::kernel_opt(*graph, matroid, kres, budget);
    }
    report.epsilon = eps;
  } else if (opt.algo == "ls") {
    report = mcvc::local_search(*graph, matroid, eps,
                                mcvc::PotentialCoefficients::for_graph(alpha2));
  } else if (opt.algo == "ls23") {
    report = mcvc::contracted_search(*graph, matroid);
  } else if (opt.algo == "ls34") {
    report = mcvc::local_search_34(*graph, matroid, eps);
  } else if (opt.algo == "2matroid") {
    mcvc::Matroid second = mcvc::read_matroid_file(opt.matroid2_file);
    report = mcvc::two_matroid_search(*graph, matroid, second, opt.p, eps, budget);
  } else if (is_stream_algo) {
    mcvc::StreamResult result = [&] {
      if (opt.algo == "streaminc") {
        if (!stream) stream = mcvc::EdgeStream::shuffled_incidence(*graph, opt.seed);
        return mcvc::one_pass_incidence(*stream, matroid, eps, budget);
      }
      if (!stream) stream = mcvc::EdgeStream::shuffled_edge_arrival(*graph, opt.seed);
      return opt.algo == "stream2p" ? mcvc::two_pass(*stream, matroid, eps, budget)
                                    : mcvc::one_pass_edge_arrival(*stream, matroid, eps, budget);
    }();
    report = result.report;
    stats = result.stats;
    have_stats = true;
  } else {
    throw mcvc::input_error("unknown --algo: " + opt.algo);
  }

  print_report(report, opt.algo);
  if (have_stats) {
    std::cout << "passes: " << stats.passes << "\n";
    std::cout << "peak_retained_edges: " << stats.peak_retained_edges << "\n";
    std::cout << "peak_tracked_vertices: " << stats.peak_tracked_vertices << "\n";
  }
  if (opt.oracle && (graph || hypergraph)) {
    mcvc::SolveReport oracle = hypergraph ? mcvc::brute_force_opt(*hypergraph, matroid, budget)
                                          : mcvc::brute_force_opt(*graph, matroid, budget);
    std::cout << "oracle_value: " << oracle.value << "\n";
    if (!oracle.value.is_zero()) {
      std::cout << "ratio: " << (report.value / oracle.value).to_string() << " = "
                << (report.value / oracle.value).to_double() << "\n";
    }
  }
  if (opt.csv) {
    std::cout << "csv: " << csv_row(report, opt.algo) << "\n";
  }
  return kExitOk;
}

struct KernelizeOptions {
  std::string graph_file;
  std::string matroid_file;
  std::string eps_text = "0.5";
};

int run_kernelize(const KernelizeOptions& opt) {
  mcvc::Matroid matroid = mcvc::read_matroid_file(opt.matroid_file);
  mcvc::Rational eps = parse_rational_flag(opt.eps_text, "--eps");
  print_flags_header({{"graph", opt.graph_file},
                      {"matroid", opt.matroid_file},
                      {"eps", eps.to_string()}});

  if (mcvc::sniff_file_type(opt.graph_file) == mcvc::InstanceFileType::Hypergraph) {
    mcvc::WeightedHypergraph h = mcvc::read_hypergraph_file(opt.graph_file);
    mcvc::HyperKernelResult kres = mcvc::kernelize_hypergraph(h, matroid, eps);
    std::cout << "t: " << kres.t << "\n";
    std::cout << "tau: " << kres.tau << "\n";
    std::cout << "kernel_size: " << kres.kernel_vertices.size() << "\n";
    std::cout << "size_bound: " << kres.size_bound << "\n";
    std::cout << "kernel: " << mcvc::vertex_set_to_string(kres.kernel_vertices) << "\n";
    std::cout << "subset_weights: " << kres.subset_weights.size() << "\n";
    return kExitOk;
  }

  mcvc::WeightedGraph graph = mcvc::read_graph_file(opt.graph_file);
  mcvc::KernelResult kres = mcvc::kernelize(graph, matroid, eps);
  std::cout << "t: " << kres.t << "\n";
  std::cout << "tau: " << kres.tau << "\n";
  std::cout << "kernel_size: " << kres.kernel_vertices.size() << "\n";
  std::cout << "size_bound: " << kres.size_bound << "\n";
  std::cout << "size_bound_ok: "
            << (static_cast<std::int64_t>(kres.kernel_vertices.size()) <= kres.size_bound
                    ? "yes"
                    : "no")
            << "\n";
  std::cout << "kernel: " << mcvc::vertex_set_to_string(kres.kernel_vertices) << "\n";
  if (matroid.kind() == mcvc::MatroidKind::Laminar) {
    mcvc::LaminarTree tree = mcvc::build_laminar_tree(matroid);
    std::cout << "laminar_tree_nodes: " << tree.node_count() << "\n";
  }
  std::cout << "retained:\n";
  mcvc::WeightedGraph kernel_graph(graph.vertex_count(), kres.retained_edges);
  mcvc::write_graph(std::cout, kernel_graph);
  return kExitOk;
}

struct GenOptions {
  std::string family;
  std::string out_prefix;
  int k = 4;
  std::string eps_text = "0.1";
  int n = 8;
  int m_edges = 12;
  std::int64_t wmin = 1;
  std::int64_t wmax = 10;
  std::string matroid_kind = "uniform";
  int max_rank = 0;
  std::uint64_t seed = 1;
};

int run_gen(const GenOptions& opt) {
  std::optional<mcvc::Instance> instance;
  if (opt.family == "fig3") {
    instance = mcvc::gen_fig3(parse_rational_flag(opt.eps_text, "--eps"));
  } else if (opt.family == "fig4") {
    instance = mcvc::gen_fig4(opt.k);
  } else if (opt.family == "fig6") {
    instance = mcvc::gen_fig6(opt.k, parse_rational_flag(opt.eps_text, "--eps"));
  } else if (opt.family == "random") {
    mcvc::RandomSpec spec;
    spec.n = opt.n;
    spec.m_edges = opt.m_edges;
    spec.weight_min = opt.wmin;
    spec.weight_max = opt.wmax;
    spec.kind = mcvc::matroid_kind_from_string(opt.matroid_kind);
    spec.seed = opt.seed;
    spec.max_rank = opt.max_rank;
    instance = mcvc::gen_random(spec);
  } else {
    throw mcvc::input_error("unknown --family: " + opt.family);
  }

  std::string graph_path = opt.out_prefix + ".graph";
  std::string matroid_path = opt.out_prefix + ".matroid";
  std::ofstream gout(graph_path);
  if (!gout) throw mcvc::input_error(graph_path + ": cannot open for writing");
  mcvc::write_graph(gout, instance->graph);
  std::ofstream mout(matroid_path);
  if (!mout) throw mcvc::input_error(matroid_path + ": cannot open for writing");
  mcvc::write_matroid(mout, instance->matroid);
  std::cout << "wrote " << graph_path << " and " << matroid_path << "\n";
  return kExitOk;
}

struct VerifyOptions {
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string dump_prefix = "counterexample";
};

int run_verify(const VerifyOptions& opt) {
  print_flags_header({{"suite", opt.suite},
                      {"trials", std::to_string(opt.trials)},
                      {"seed", std::to_string(opt.seed)},
                      {"jobs", std::to_string(opt.jobs)}});
  mcvc::SuiteResult result =
      mcvc::run_suite(opt.suite, opt.trials, opt.seed, opt.jobs, opt.dump_prefix);
  std::cout << "suite: " << opt.suite << "\n";
  std::cout << "trials: " << result.trials << "\n";
  std::cout << "failures: " << result.failures << "\n";
  for (const std::string& message : result.messages) {
    std::cout << "failure: " << message << "\n";
  }
  std::cout << (result.failures == 0 ? "PASS" : "FAIL") << "\n";
  return result.failures == 0 ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum vertex cover under matroid constraints"};
  app.require_subcommand(1);

  KernelizeOptions kernelize_opt;
  CLI::App* kernelize_cmd =
      app.add_subcommand("kernelize", "Extract the greedy kernel of an instance");
  kernelize_cmd->add_option("graph", kernelize_opt.graph_file, "graph file")->required();
  kernelize_cmd->add_option("matroid", kernelize_opt.matroid_file, "matroid file")->required();
  kernelize_cmd->add_option("--eps", kernelize_opt.eps_text, "approximation parameter in (0,1]");

  SolveOptions solve_opt;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run a solver on an instance");
  solve_cmd->add_option("graph", solve_opt.graph_file, "graph or stream file")->required();
  solve_cmd->add_option("matroid", solve_opt.matroid_file, "matroid file")->required();
  solve_cmd
      ->add_option("--algo", solve_opt.algo,
                   "kernel-bf | ls | ls23 | ls34 | bf | stream2p | stream1p | streaminc | 2matroid")
      ->required();
  solve_cmd->add_option("--eps", solve_opt.eps_text, "eps (default 1/(3k)^2 or per algorithm)");
  solve_cmd->add_option("--alpha2", solve_opt.alpha2_text, "potential coefficient for --algo ls");
  solve_cmd->add_option("--p", solve_opt.p, "exchange size parameter for 2matroid");
  solve_cmd->add_option("--seed", solve_opt.seed, "stream shuffle seed");
  solve_cmd->add_option("--matroid2-file", solve_opt.matroid2_file, "second matroid (2matroid)");
  solve_cmd->add_flag("--oracle", solve_opt.oracle, "also run brute force and print the ratio");
  solve_cmd->add_flag("--csv", solve_opt.csv, "append a one-line CSV record");

  GenOptions gen_opt;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate instance files");
  gen_cmd->add_option("--family", gen_opt.family, "fig3 | fig4 | fig6 | random")->required();
  gen_cmd->add_option("--out", gen_opt.out_prefix, "output file prefix")->required();
  gen_cmd->add_option("--k", gen_opt.k, "layer size for fig4/fig6");
  gen_cmd->add_option("--eps", gen_opt.eps_text, "eps for fig3/fig6");
  gen_cmd->add_option("--n", gen_opt.n, "vertex count (random)");
  gen_cmd->add_option("--m", gen_opt.m_edges, "edge count (random)");
  gen_cmd->add_option("--wmin", gen_opt.wmin, "minimum integer weight (random)");
  gen_cmd->add_option("--wmax", gen_opt.wmax, "maximum integer weight (random)");
  gen_cmd->add_option("--matroid-kind", gen_opt.matroid_kind,
                      "uniform | partition | laminar | transversal | explicit");
  gen_cmd->add_option("--max-rank", gen_opt.max_rank, "rank cap (0 = min(n,4))");
  gen_cmd->add_option("--seed", gen_opt.seed, "generator seed");

  VerifyOptions verify_opt;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("--suite", verify_opt.suite, "axioms | kernel | ratios | stream")
      ->required();
  verify_cmd->add_option("--trials", verify_opt.trials, "number of seeded trials")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_opt.seed, "base seed");
  verify_cmd->add_option("--jobs", verify_opt.jobs, "parallel workers")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--dump-prefix", verify_opt.dump_prefix,
                         "prefix for counterexample dumps");

  try {
    app.parse(argc, argv);
    if (kernelize_cmd->parsed()) return run_kernelize(kernelize_opt);
    if (solve_cmd->parsed()) return run_solve(solve_opt);
    if (gen_cmd->parsed()) return run_gen(gen_opt);
    if (verify_cmd->parsed()) return run_verify(verify_opt);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const mcvc::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const mcvc::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const mcvc::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mcvc::contract_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitSuiteFailure;
  }
}
