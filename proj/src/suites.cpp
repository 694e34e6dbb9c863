#include "mcvc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "mcvc/errors.hpp"
#include "mcvc/exact.hpp"
#include "mcvc/io.hpp"
#include "mcvc/kernel.hpp"
#include "mcvc/localsearch.hpp"
#include "mcvc/rng.hpp"
#include "mcvc/streaming.hpp"
#include "mcvc/witness.hpp"

namespace mcvc {
namespace {

constexpr MatroidKind kKernelKinds[] = {MatroidKind::Uniform, MatroidKind::Partition,
                                        MatroidKind::Laminar, MatroidKind::Transversal};

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet out;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

// All independent subsets of a small ground set, as bitmasks.
std::vector<std::uint32_t> enumerate_independent(const IndependenceOracle& m) {
  const int n = m.ground_size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (m.is_independent(mask_to_set(mask))) out.push_back(mask);
  }
  return out;
}

// Partition-search union oracle, independent of the library's code path.
bool union_by_partition_search(const Matroid& base, const VertexSet& s, int tau) {
  std::vector<VertexSet> buckets(static_cast<std::size_t>(tau));
  auto rec = [&](auto&& self, std::size_t next) -> bool {
    if (next == s.size()) return true;
    int used = 0;
    while (used < tau && !buckets[static_cast<std::size_t>(used)].empty()) ++used;
    int limit = std::min(tau, used + 1);
    for (int b = 0; b < limit; ++b) {
      auto& bucket = buckets[static_cast<std::size_t>(b)];
      bucket.push_back(s[next]);
      if (base.is_independent(bucket) && self(self, next + 1)) return true;
      bucket.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

VertexSet random_independent_set(const Matroid& m, Rng& rng, bool full_base) {
  std::vector<int> order(static_cast<std::size_t>(m.ground_size()));
  for (int v = 0; v < m.ground_size(); ++v) order[static_cast<std::size_t>(v)] = v;
  rng.shuffle(order);
  VertexSet current;
  for (int v : order) {
    if (!full_base && rng.next() % 3 == 0) continue;
    VertexSet probe = current;
    probe.insert(std::upper_bound(probe.begin(), probe.end(), v), v);
    if (m.is_independent(probe)) current = std::move(probe);
  }
  return current;
}

Instance random_instance(std::uint64_t seed, int trial, MatroidKind kind, int max_n,
                         int max_rank) {
  Rng rng(seed * 0x9e3779b9u + static_cast<std::uint64_t>(trial) + 1);
  RandomSpec spec;
  spec.n = rng.uniform_int(std::min(4, max_n), max_n);
  std::int64_t all_pairs = static_cast<std::int64_t>(spec.n) * (spec.n - 1) / 2;
  spec.m_edges = static_cast<int>(rng.uniform(std::min<std::int64_t>(3, all_pairs), all_pairs));
  spec.weight_min = 1;
  spec.weight_max = 10;
  spec.kind = kind;
  spec.seed = seed + static_cast<std::uint64_t>(trial) * 7919u;
  spec.max_rank = max_rank;
  return gen_random(spec);
}

std::string describe(const Instance& inst, const std::string& what) {
  std::ostringstream out;
  out << what << " [n=" << inst.graph.vertex_count() << " m=" << inst.graph.edge_count()
      << " kind=" << to_string(inst.matroid.kind()) << "]";
  return out.str();
}

}  // namespace

std::optional<std::string> check_axioms_trial(std::uint64_t seed, int trial) {
  MatroidKind kind = kKernelKinds[trial % 4];
  Rng rng(seed + static_cast<std::uint64_t>(trial) * 1299709u);
  Instance inst = random_instance(seed, trial, kind, 10, 4);
  const Matroid& m = inst.matroid;
  const int n = m.ground_size();

  std::vector<std::uint32_t> independent = enumerate_independent(m);
  std::vector<char> is_indep(1u << n, 0);
  for (std::uint32_t mask : independent) is_indep[mask] = 1;
  if (!is_indep[0]) return describe(inst, "empty set reported dependent");

  // Hereditary: all one-element-removals of an independent set stay in.
  for (std::uint32_t mask : independent) {
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) {
        if (!is_indep[mask & ~(1u << v)]) {
          return describe(inst, "hereditary property fails at " +
                                    vertex_set_to_string(mask_to_set(mask)));
        }
      }
    }
  }

  // Exchange: a larger independent set always lends an element.
  for (std::uint32_t x : independent) {
    for (std::uint32_t y : independent) {
      if (std::popcount(y) <= std::popcount(x)) continue;
      bool extended = false;
      std::uint32_t candidates = y & ~x;
      for (int v = 0; v < n && !extended; ++v) {
        if ((candidates >> v) & 1u) extended = is_indep[x | (1u << v)];
      }
      if (!extended) {
        return describe(inst, "exchange property fails for " +
                                  vertex_set_to_string(mask_to_set(x)) + " vs " +
                                  vertex_set_to_string(mask_to_set(y)));
      }
    }
  }

  // Structured oracle vs an explicit matroid rebuilt from its bases.
  int k = rank(m);
  std::vector<VertexSet> bases;
  for (std::uint32_t mask : independent) {
    if (std::popcount(mask) == k) bases.push_back(mask_to_set(mask));
  }
  Matroid explicit_twin = Matroid::explicit_bases(n, bases);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (explicit_twin.is_independent(mask_to_set(mask)) != static_cast<bool>(is_indep[mask])) {
      return describe(inst, "explicit twin disagrees on " +
                                vertex_set_to_string(mask_to_set(mask)));
    }
  }

  // Union view vs exhaustive partition search on a smaller instance.
  Instance small = random_instance(seed ^ 0xabcdef, trial, kind, 8, 3);
  int tau = 2 + trial % 2;
  UnionView unioned(small.matroid, tau);
  for (std::uint32_t mask = 0; mask < (1u << small.matroid.ground_size()); ++mask) {
    VertexSet s = mask_to_set(mask);
    if (unioned.is_independent(s) != union_by_partition_search(small.matroid, s, tau)) {
      return describe(small, "union view disagrees with partition search on " +
                                 vertex_set_to_string(s) + " tau=" + std::to_string(tau));
    }
  }

  // Contraction against its definition.
  VertexSet contracted = random_independent_set(m, rng, false);
  ContractView cv(m, contracted);
  std::uint32_t contracted_mask = 0;
  for (int v : contracted) contracted_mask |= 1u << v;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s = mask_to_set(mask);
    bool overlap = (mask & contracted_mask) != 0;
    bool expected = !overlap && static_cast<bool>(is_indep[mask | contracted_mask]);
    if (cv.is_independent(s) != expected) {
      return describe(inst, "contract view disagrees on " + vertex_set_to_string(s));
    }
  }

  // Circuit extraction on a random dependent extension.
  VertexSet base_set = random_independent_set(m, rng, true);
  for (int v = 0; v < n; ++v) {
    if (set_contains(base_set, v)) continue;
    VertexSet dependent = base_set;
    dependent.insert(std::upper_bound(dependent.begin(), dependent.end(), v), v);
    if (m.is_independent(dependent)) continue;
    VertexSet circuit = find_circuit(m, dependent);
    for (int e : dependent) {
      VertexSet without;
      for (int x : dependent) {
        if (x != e) without.push_back(x);
      }
      bool removed_ok = m.is_independent(without);
      if (set_contains(circuit, e) != removed_ok) {
        return describe(inst, "circuit extraction disagrees at element " + std::to_string(e));
      }
    }
    break;
  }

  return std::nullopt;
}

std::optional<std::string> check_kernel_trial(std::uint64_t seed, int trial, MatroidKind kind,
                                              const Rational& eps) {
  Instance inst = random_instance(seed, trial, kind, 14, 4);
  const WeightedGraph& g = inst.graph;
  const Matroid& m = inst.matroid;

  KernelResult kres = kernelize(g, m, eps);
  if (static_cast<std::int64_t>(kres.kernel_vertices.size()) > kres.size_bound) {
    return describe(inst, "kernel size " + std::to_string(kres.kernel_vertices.size()) +
                              " exceeds bound " + std::to_string(kres.size_bound));
  }

  UnionView unioned(m, kres.tau);
  if (!unioned.is_independent(kres.kernel_vertices)) {
    return describe(inst, "kernel is dependent in the scaled union");
  }

  // Every rejected vertex is spanned, and only by heavier kernel vertices.
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (set_contains(kres.kernel_vertices, u)) continue;
    VertexSet extended = kres.kernel_vertices;
    extended.insert(std::upper_bound(extended.begin(), extended.end(), u), u);
    if (unioned.is_independent(extended)) {
      return describe(inst, "rejected vertex " + std::to_string(u) + " is not spanned");
    }
    VertexSet circuit = find_circuit(unioned, extended);
    for (int x : circuit) {
      if (x != u && g.weighted_degree(x) < g.weighted_degree(u)) {
        return describe(inst, "blocking vertex " + std::to_string(x) +
                                  " is lighter than rejected vertex " + std::to_string(u));
      }
    }
  }

  SolveReport opt = brute_force_opt(g, m);
  SolveReport restricted = kernel_opt(g, m, kres);
  if (restricted.value < (Rational(1) - eps) * opt.value) {
    return describe(inst, "kernel optimum " + restricted.value.to_string() +
                              " below (1-eps) * " + opt.value.to_string());
  }

  // Degree-formula evaluation must match direct coverage on the winner.
  if (restricted.value != g.coverage(restricted.solution)) {
    return describe(inst, "kernel degree formula mismatches direct coverage");
  }
  return std::nullopt;
}

std::optional<std::string> check_hypergraph_kernel_trial(std::uint64_t seed, int trial,
                                                         MatroidKind kind, const Rational& eps) {
  Rng rng(seed + static_cast<std::uint64_t>(trial) * 15485863u);
  int n = rng.uniform_int(4, 12);
  int m_edges = rng.uniform_int(3, 2 * n);
  const int eta = 3;
  WeightedHypergraph g =
      gen_random_hypergraph(n, m_edges, eta, 1, 10, seed + static_cast<std::uint64_t>(trial));
  RandomSpec spec;
  spec.n = n;
  spec.m_edges = 0;
  spec.kind = kind;
  spec.seed = seed + static_cast<std::uint64_t>(trial) * 17;
  spec.max_rank = 3;
  Matroid matroid = gen_random(spec).matroid;

  HyperKernelResult kres = kernelize_hypergraph(g, matroid, eps);
  SolveReport opt = brute_force_opt(g, matroid);
  SolveReport restricted = kernel_opt(g, matroid, kres);
  Rational guarantee = Rational(1) - Rational(eta - 1) * eps;
  if (restricted.value < guarantee * opt.value) {
    return "hypergraph kernel optimum " + restricted.value.to_string() + " below " +
           guarantee.to_string() + " * " + opt.value.to_string();
  }
  return std::nullopt;
}

std::optional<std::string> check_witness_trial(std::uint64_t seed, int trial, MatroidKind kind) {
  Instance inst = random_instance(seed, trial, kind, 10, 3);
  Rng rng(seed + static_cast<std::uint64_t>(trial) * 104729u);
  const Rational eps(1, 1 + trial % 3);
  KernelResult kres = kernelize(inst.graph, inst.matroid, eps);

  for (bool full_base : {false, true}) {
    VertexSet o = random_independent_set(inst.matroid, rng, full_base);
    RobustWitness witness = build_robust_witness(inst.graph, inst.matroid, kres, o);
    if (!witness_valid(inst.matroid, kres, o, witness)) {
      return describe(inst, "robustness witness invalid for o=" + vertex_set_to_string(o));
    }
    // A corrupted witness (one pool shrunk) must fail validation.
    if (!witness.replacements.empty()) {
      RobustWitness corrupted = witness;
      corrupted.replacements.front().second.pop_back();
      if (witness_valid(inst.matroid, kres, o, corrupted)) {
        return describe(inst, "corrupted witness passed validation");
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_ratio_trial(std::uint64_t seed, int trial) {
  MatroidKind kind = kKernelKinds[trial % 4];
  Instance inst = random_instance(seed, trial, kind, 10, 3);
  const WeightedGraph& g = inst.graph;
  const Matroid& m = inst.matroid;
  SolveReport opt = brute_force_opt(g, m);

  SolveReport two_thirds = contracted_search(g, m);
  if (Rational(3) * two_thirds.value < Rational(2) * opt.value) {
    return describe(inst, "contracted search below 2/3: " + two_thirds.value.to_string() +
                              " vs " + opt.value.to_string());
  }
  if (two_thirds.max_phase_swaps > swap_count_bound(*two_thirds.epsilon)) {
    return describe(inst, "contracted search exceeded the swap bound");
  }

  SolveReport fpt = local_search_34(g, m);
  if (Rational(4) * fpt.value < Rational(3) * opt.value) {
    return describe(inst, "recursive search below 3/4: " + fpt.value.to_string() + " vs " +
                              opt.value.to_string());
  }
  if (fpt.max_phase_swaps > swap_count_bound(*fpt.epsilon)) {
    return describe(inst, "recursive search exceeded the swap bound");
  }

  MatroidKind kind2 = kKernelKinds[(trial + 1) % 4];
  RandomSpec spec;
  spec.n = m.ground_size();
  spec.m_edges = 0;
  spec.kind = kind2;
  spec.seed = seed + static_cast<std::uint64_t>(trial) * 23u;
  spec.max_rank = 3;
  Matroid m2 = gen_random(spec).matroid;
  IntersectionView common(m, m2);
  SolveReport opt2 = brute_force_opt(g, common);
  for (int p : {1, 2}) {
    SolveReport joint = two_matroid_search(g, m, m2, p);
    if (Rational(3 * (p + 1)) * joint.value < Rational(2 * p) * opt2.value) {
      return describe(inst, "two-matroid search below 2/3(1-1/(p+1)) at p=" +
                                std::to_string(p) + ": " + joint.value.to_string() + " vs " +
                                opt2.value.to_string());
    }
    if (joint.max_phase_swaps > swap_count_bound(*joint.epsilon)) {
      return describe(inst, "two-matroid search exceeded the swap bound");
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_stream_trial(std::uint64_t seed, int trial, MatroidKind kind,
                                              const Rational& eps) {
  Instance inst = random_instance(seed, trial, kind, 12, 4);
  const WeightedGraph& g = inst.graph;
  const Matroid& m = inst.matroid;
  const int k = std::max(1, rank(m));

  KernelResult kres = kernelize(g, m, eps);
  SolveReport offline = kernel_opt(g, m, kres);

  EdgeStream arrival = EdgeStream::shuffled_edge_arrival(g, seed + static_cast<std::uint64_t>(trial));
  StreamResult two = two_pass(arrival, m, eps);
  if (two.report.value != offline.value || two.report.solution != offline.solution) {
    return describe(inst, "two-pass result diverges from kernel_opt");
  }
  std::int64_t bound = kres.size_bound;
  if (two.stats.peak_retained_edges > bound * bound) {
    return describe(inst, "two-pass retained more than bound^2 edges");
  }

  StreamResult single = one_pass_edge_arrival(arrival, m, eps);
  SolveReport opt = brute_force_opt(g, m);
  if (single.report.value < (Rational(1) - eps) * opt.value) {
    return describe(inst, "one-pass edge arrival below (1-eps) optimum");
  }
  if (*single.report.stream_estimate < single.report.value) {
    return describe(inst, "stream estimate fell below the true coverage");
  }
  std::int64_t heap_cap = ceil_recip(eps / Rational(2 * k));
  if (single.stats.peak_retained_edges >
      static_cast<std::int64_t>(g.vertex_count()) * heap_cap) {
    return describe(inst, "one-pass edge arrival exceeded its edge budget");
  }

  for (std::uint64_t shuffle = 0; shuffle < 3; ++shuffle) {
    EdgeStream inc = EdgeStream::shuffled_incidence(g, seed + shuffle * 101 +
                                                           static_cast<std::uint64_t>(trial));
    StreamResult one = one_pass_incidence(inc, m, eps);
    if (one.report.solution != offline.solution || one.report.value != offline.value) {
      return describe(inst, "incidence stream solve diverges from kernel_opt");
    }
    if (one.stats.peak_retained_edges > bound * bound + 2 * bound) {
      return describe(inst, "incidence stream exceeded its edge budget");
    }
  }
  return std::nullopt;
}

namespace {

using TrialFn = std::function<std::optional<std::string>(int)>;

SuiteResult run_trials(int trials, int jobs, const TrialFn& fn) {
  SuiteResult result;
  result.trials = trials;
  std::vector<std::optional<std::string>> outcomes(static_cast<std::size_t>(trials));
  if (jobs <= 1) {
    for (int i = 0; i < trials; ++i) outcomes[static_cast<std::size_t>(i)] = fn(i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= trials) return;
        outcomes[static_cast<std::size_t>(i)] = fn(i);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (int i = 0; i < trials; ++i) {
    if (outcomes[static_cast<std::size_t>(i)]) {
      ++result.failures;
      result.messages.push_back("trial " + std::to_string(i) + ": " +
                                *outcomes[static_cast<std::size_t>(i)]);
    }
  }
  return result;
}

void dump_counterexample(const std::string& prefix, const std::string& suite, int trial,
                         std::uint64_t seed) {
  // Re-derive the failing trial's primary instance and write it out.
  int max_n = 14;
  int max_rank = 4;
  if (suite == "axioms") {
    max_n = 10;
  } else if (suite == "ratios") {
    max_n = 10;
    max_rank = 3;
  } else if (suite == "stream") {
    max_n = 12;
  }
  MatroidKind kind = kKernelKinds[trial % 4];
  Instance inst = random_instance(seed, trial, kind, max_n, max_rank);
  std::ofstream gout(prefix + "_" + suite + "_" + std::to_string(trial) + ".graph");
  write_graph(gout, inst.graph);
  std::ofstream mout(prefix + "_" + suite + "_" + std::to_string(trial) + ".matroid");
  write_matroid(mout, inst.matroid);
}

}  // namespace

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed, int jobs,
                      const std::string& dump_prefix) {
  if (trials < 1) throw input_error("suite needs at least one trial");
  const Rational eps_cycle[] = {Rational(1, 2), Rational(1, 3), Rational(1, 4)};

  TrialFn fn;
  if (name == "axioms") {
    fn = [&](int i) { return check_axioms_trial(seed, i); };
  } else if (name == "kernel") {
    fn = [&](int i) -> std::optional<std::string> {
      MatroidKind kind = kKernelKinds[i % 4];
      const Rational& eps = eps_cycle[i % 3];
      if (auto failure = check_kernel_trial(seed, i, kind, eps)) return failure;
      if (auto failure = check_witness_trial(seed, i, kind)) return failure;
      if (i % 3 == 0) {
        return check_hypergraph_kernel_trial(seed, i, kind, Rational(1, 4));
      }
      return std::nullopt;
    };
  } else if (name == "ratios") {
    fn = [&](int i) { return check_ratio_trial(seed, i); };
  } else if (name == "stream") {
    fn = [&](int i) {
      return check_stream_trial(seed, i, kKernelKinds[i % 4], eps_cycle[i % 3]);
    };
  } else {
    throw input_error("unknown suite: " + name);
  }

  SuiteResult result = run_trials(trials, jobs, fn);
  for (const std::string& message : result.messages) {
    auto pos = message.find(':');
    int trial = std::stoi(message.substr(6, pos - 6));
    dump_counterexample(dump_prefix, name, trial, seed);
  }
  return result;
}

}  // namespace mcvc
