// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All thresholds are exact rationals; the two timed groups carry
// wall-clock deadlines.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcvc/exact.hpp"
#include "mcvc/generators.hpp"
#include "mcvc/kernel.hpp"
#include "mcvc/localsearch.hpp"
#include "mcvc/rng.hpp"
#include "mcvc/streaming.hpp"
#include "mcvc/suites.hpp"
#include "mcvc/witness.hpp"

namespace {

using mcvc::Instance;
using mcvc::Matroid;
using mcvc::MatroidKind;
using mcvc::Rational;
using mcvc::VertexSet;

constexpr std::uint64_t kSeed = 20240601;

struct Criterion {
  int failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (notes.size() < 5) notes.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Instance random_instance(std::uint64_t seed, int trial, MatroidKind kind, int max_n,
                         int max_rank) {
  mcvc::Rng rng(seed * 0x9e3779b9u + static_cast<std::uint64_t>(trial) + 1);
  mcvc::RandomSpec spec;
  spec.n = rng.uniform_int(std::min(5, max_n), max_n);
  std::int64_t all_pairs = static_cast<std::int64_t>(spec.n) * (spec.n - 1) / 2;
  spec.m_edges = static_cast<int>(rng.uniform(std::min<std::int64_t>(4, all_pairs), all_pairs));
  spec.kind = kind;
  spec.seed = seed + static_cast<std::uint64_t>(trial) * 7919u;
  spec.max_rank = max_rank;
  return mcvc::gen_random(spec);
}

VertexSet random_independent(const Matroid& m, mcvc::Rng& rng, bool full_base) {
  std::vector<int> order(static_cast<std::size_t>(m.ground_size()));
  for (int v = 0; v < m.ground_size(); ++v) order[static_cast<std::size_t>(v)] = v;
  rng.shuffle(order);
  VertexSet out;
  for (int v : order) {
    if (!full_base && rng.next() % 3 == 0) continue;
    VertexSet probe = out;
    probe.insert(std::upper_bound(probe.begin(), probe.end(), v), v);
    if (m.is_independent(probe)) out = std::move(probe);
  }
  return out;
}

int report(int number, const std::string& name, const Criterion& crit,
           const std::string& extra = "") {
  std::cout << "criterion " << number << " [" << name << "]: "
            << (crit.failures == 0 ? "PASS" : "FAIL");
  if (!extra.empty()) std::cout << " (" << extra << ")";
  std::cout << "\n";
  for (const std::string& note : crit.notes) {
    std::cout << "    " << note << "\n";
  }
  return crit.failures == 0 ? 0 : 1;
}

}  // namespace

int main() {
  const MatroidKind kinds[] = {MatroidKind::Uniform, MatroidKind::Partition,
                               MatroidKind::Laminar, MatroidKind::Transversal};
  const Rational eps_cycle[] = {Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  int failed_criteria = 0;

  // Criteria 1, 2 and the arrival/tw-pass halves of 9 share one instance
  // loop: 200 instances per matroid kind, n <= 14, rank <= 4.
  Criterion c1, c2, c9;
  std::ostringstream c1_extra, c9_extra;
  {
    auto start = std::chrono::steady_clock::now();
    for (MatroidKind kind : kinds) {
      for (int i = 0; i < 200; ++i) {
        const Rational& eps = eps_cycle[i % 3];
        int trial = static_cast<int>(&kind - kinds) * 1000 + i;
        Instance inst = random_instance(kSeed, trial, kind, 14, 4);

        mcvc::KernelResult kres = mcvc::kernelize(inst.graph, inst.matroid, eps);
        c2.expect(static_cast<std::int64_t>(kres.kernel_vertices.size()) <= kres.size_bound,
                  "kernel size above bound, kind=" + mcvc::to_string(kind) +
                      " trial=" + std::to_string(i));

        mcvc::SolveReport best = mcvc::brute_force_opt(inst.graph, inst.matroid);
        mcvc::SolveReport inside = mcvc::kernel_opt(inst.graph, inst.matroid, kres);
        c1.expect(inside.value >= (Rational(1) - eps) * best.value,
                  "kernel guarantee broken, kind=" + mcvc::to_string(kind) +
                      " trial=" + std::to_string(i) + " eps=" + eps.to_string());

        // Criterion 9 on the very same instances.
        mcvc::EdgeStream arrival =
            mcvc::EdgeStream::shuffled_edge_arrival(inst.graph, kSeed + trial);
        mcvc::StreamResult two = mcvc::two_pass(arrival, inst.matroid, eps);
        c9.expect(two.report.value == inside.value && two.report.solution == inside.solution,
                  "two-pass diverged from kernel_opt, trial=" + std::to_string(trial));

        mcvc::StreamResult one = mcvc::one_pass_edge_arrival(arrival, inst.matroid, eps);
        c9.expect(one.report.value >= (Rational(1) - eps) * best.value,
                  "one-pass edge arrival below (1-eps) optimum, trial=" +
                      std::to_string(trial));
        c9.expect(*one.report.stream_estimate >= one.report.value,
                  "stream estimate below true coverage, trial=" + std::to_string(trial));
        int k = std::max(1, mcvc::rank(inst.matroid));
        std::int64_t heap_cap = mcvc::ceil_recip(eps / Rational(2 * k));
        c9.expect(one.stats.peak_retained_edges <=
                      static_cast<std::int64_t>(inst.graph.vertex_count()) * heap_cap,
                  "edge-arrival space bound broken, trial=" + std::to_string(trial));
      }
    }
    double elapsed = seconds_since(start);
    c1.expect(elapsed < 60.0, "criterion 1 exceeded 60 s: " + std::to_string(elapsed));
    c1_extra << "800 instances, " << elapsed << " s";
  }
  failed_criteria += report(1, "kernel guarantee", c1, c1_extra.str());
  failed_criteria += report(2, "kernel size bounds", c2);

  // Criterion 3: laminar robustness witnesses, n <= 10.
  Criterion c3;
  {
    for (int i = 0; i < 100; ++i) {
      Instance inst = random_instance(kSeed + 11, i, MatroidKind::Laminar, 10, 3);
      const Rational& eps = eps_cycle[i % 3];
      mcvc::KernelResult kres = mcvc::kernelize(inst.graph, inst.matroid, eps);
      mcvc::Rng rng(kSeed + static_cast<std::uint64_t>(i) * 53u);
      for (bool full : {false, true}) {
        VertexSet o = random_independent(inst.matroid, rng, full);
        try {
          mcvc::RobustWitness witness =
              mcvc::laminar_robust_witness(inst.graph, inst.matroid, kres, o);
          c3.expect(mcvc::witness_valid(inst.matroid, kres, o, witness, 10'000),
                    "witness failed validation, trial=" + std::to_string(i));
        } catch (const std::exception& e) {
          c3.expect(false, std::string("witness construction threw: ") + e.what());
        }
      }
    }
  }
  failed_criteria += report(3, "laminar robustness witness", c3);

  // Criterion 4: the two-edge tightness instance.
  Criterion c4;
  std::int64_t c8_worst = 0;
  Rational c8_worst_bound;
  bool c8_ok = true;
  {
    Instance fig3 = mcvc::gen_fig3(Rational(1, 10));
    auto coeffs = mcvc::PotentialCoefficients::for_graph(Rational(3, 2));
    Rational eps = mcvc::default_local_search_eps(mcvc::rank(fig3.matroid));
    mcvc::SolveReport stuck = mcvc::local_search(fig3.graph, fig3.matroid, eps, coeffs);
    c4.expect(stuck.value == Rational(2), "swap search value is not exactly 2");
    mcvc::SolveReport best = mcvc::brute_force_opt(fig3.graph, fig3.matroid);
    c4.expect(best.value == Rational(29, 10), "optimum is not exactly 2.9");
    mcvc::SolveReport rescued = mcvc::contracted_search(fig3.graph, fig3.matroid);
    c4.expect(rescued.value == Rational(29, 10), "contracted search is not exactly 2.9");
    c8_ok = c8_ok && stuck.max_phase_swaps <= mcvc::swap_count_bound(eps) &&
            rescued.max_phase_swaps <= mcvc::swap_count_bound(*rescued.epsilon);
  }
  failed_criteria += report(4, "two-edge tightness", c4);

  // Criterion 5: biclique family at k=6, alpha2=4/3.
  Criterion c5;
  {
    const int k = 6;
    Instance inst = mcvc::gen_fig4(k);
    VertexSet a_layer, b_layer;
    for (int i = 0; i < k; ++i) {
      a_layer.push_back(i);
      b_layer.push_back(k + i);
    }
    c5.expect(inst.graph.coverage(a_layer) == Rational(36), "coverage(a) != 36");
    c5.expect(inst.graph.coverage(b_layer) == Rational(54), "coverage(b) != 54");
    c5.expect(inst.graph.coverage(a_layer) / inst.graph.coverage(b_layer) == Rational(2, 3),
              "a/b ratio is not exactly 2/3");
    Rational alpha2(4, 3);
    auto coeffs = mcvc::PotentialCoefficients::for_graph(alpha2);
    for (int p : {1, 2}) {
      VertexSet removal, addition;
      for (int i = 0; i < p; ++i) {
        removal.push_back(i);
        addition.push_back(k + i);
      }
      Rational measured = mcvc::exchange_gain(inst.graph, a_layer, removal, addition, coeffs);
      Rational expected = Rational(p) * Rational(k) * (alpha2 - Rational(3, 2)) +
                          Rational(p) * Rational(p) * (Rational(2) - alpha2);
      c5.expect(measured == expected, "swap gain mismatch at p=" + std::to_string(p));
    }
  }
  failed_criteria += report(5, "biclique swap gains", c5);

  // Criterion 6: oblivious potential on the pendant family, k=8, eps=1/2.
  Criterion c6;
  {
    const int k = 8;
    Rational eps(1, 2);
    Instance inst = mcvc::gen_fig6(k, eps);
    auto oblivious = mcvc::PotentialCoefficients::oblivious();
    VertexSet a_layer;
    for (int i = 0; i < k; ++i) a_layer.push_back(i);
    for (int p : {1, 2}) {
      c6.expect(!mcvc::improving_exchange_exists(inst.graph, inst.matroid, a_layer, p,
                                                 oblivious),
                "found an improving exchange at p=" + std::to_string(p));
      VertexSet removal, addition;
      for (int i = 0; i < p; ++i) {
        removal.push_back(i);
        addition.push_back(k + i);
      }
      Rational measured =
          mcvc::exchange_gain(inst.graph, a_layer, removal, addition, oblivious);
      Rational expected = -Rational(p) * Rational(k) * eps + Rational(p) * Rational(p);
      c6.expect(measured == expected, "gain formula mismatch at p=" + std::to_string(p));
    }
  }
  failed_criteria += report(6, "oblivious local optimum", c6);

  // Criterion 7 (+8): approximation ratios on 100 instances, n <= 10,
  // ranks <= 3, under five minutes.
  Criterion c7;
  std::ostringstream c7_extra;
  {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 100; ++i) {
      MatroidKind kind = kinds[i % 4];
      Instance inst = random_instance(kSeed + 23, i, kind, 10, 3);
      mcvc::SolveReport opt = mcvc::brute_force_opt(inst.graph, inst.matroid);

      mcvc::SolveReport two_thirds = mcvc::contracted_search(inst.graph, inst.matroid);
      c7.expect(Rational(3) * two_thirds.value >= Rational(2) * opt.value,
                "contracted search below 2/3, trial=" + std::to_string(i));
      std::int64_t bound = mcvc::swap_count_bound(*two_thirds.epsilon);
      c8_ok = c8_ok && two_thirds.max_phase_swaps <= bound;
      c8_worst = std::max(c8_worst, two_thirds.max_phase_swaps);

      mcvc::SolveReport fpt = mcvc::local_search_34(inst.graph, inst.matroid);
      c7.expect(Rational(4) * fpt.value >= Rational(3) * opt.value,
                "recursive search below 3/4, trial=" + std::to_string(i));
      c8_ok = c8_ok && fpt.max_phase_swaps <= mcvc::swap_count_bound(*fpt.epsilon);

      mcvc::RandomSpec spec2;
      spec2.n = inst.matroid.ground_size();
      spec2.m_edges = 0;
      spec2.kind = kinds[(i + 1) % 4];
      spec2.seed = kSeed + static_cast<std::uint64_t>(i) * 101u;
      spec2.max_rank = 3;
      Matroid second = mcvc::gen_random(spec2).matroid;
      mcvc::IntersectionView common(inst.matroid, second);
      mcvc::SolveReport opt2 = mcvc::brute_force_opt(inst.graph, common);
      for (int p : {1, 2}) {
        mcvc::SolveReport joint =
            mcvc::two_matroid_search(inst.graph, inst.matroid, second, p);
        c7.expect(Rational(3 * (p + 1)) * joint.value >= Rational(2 * p) * opt2.value,
                  "two-matroid search below its ratio, trial=" + std::to_string(i) +
                      " p=" + std::to_string(p));
        c8_ok = c8_ok && joint.max_phase_swaps <= mcvc::swap_count_bound(*joint.epsilon);
        c8_worst = std::max(c8_worst, joint.max_phase_swaps);
      }
    }
    double elapsed = seconds_since(start);
    c7.expect(elapsed < 300.0, "criterion 7 exceeded 5 min: " + std::to_string(elapsed));
    c7_extra << "100 instances, " << elapsed << " s";
  }
  failed_criteria += report(7, "approximation ratios", c7, c7_extra.str());

  Criterion c8;
  c8.expect(c8_ok, "a local-search phase exceeded ceil(log2/log(1+eps)) swaps");
  failed_criteria += report(8, "swap-count bound", c8,
                            "worst phase " + std::to_string(c8_worst) + " swaps");

  // Criterion 9, incidence half: 20 instances x 50 shuffles.
  {
    for (int i = 0; i < 20; ++i) {
      MatroidKind kind = kinds[i % 4];
      Instance inst = random_instance(kSeed + 31, i, kind, 12, 4);
      const Rational& eps = eps_cycle[i % 3];
      mcvc::KernelResult kres = mcvc::kernelize(inst.graph, inst.matroid, eps);
      std::int64_t bound = kres.size_bound;
      for (std::uint64_t shuffle = 0; shuffle < 50; ++shuffle) {
        mcvc::EdgeStream stream = mcvc::EdgeStream::shuffled_incidence(
            inst.graph, kSeed + static_cast<std::uint64_t>(i) * 997u + shuffle);
        mcvc::StreamResult result = mcvc::one_pass_incidence(stream, inst.matroid, eps);
        c9.expect(result.kernel == kres.kernel_vertices,
                  "incidence kernel diverged, instance=" + std::to_string(i) +
                      " shuffle=" + std::to_string(shuffle));
        c9.expect(result.stats.peak_retained_edges <= bound * bound + 2 * bound,
                  "incidence space bound broken, instance=" + std::to_string(i));
      }
    }
    c9_extra << "800 arrival runs, 1000 incidence runs";
  }
  failed_criteria += report(9, "streaming equivalence and space", c9, c9_extra.str());

  // Criterion 10: hypergraph kernels at eta=3.
  Criterion c10;
  {
    for (const Rational& eps : {Rational(1, 4), Rational(1, 3)}) {
      for (int i = 0; i < 60; ++i) {
        MatroidKind kind = kinds[i % 4];
        if (auto failure = mcvc::check_hypergraph_kernel_trial(kSeed + 41, i, kind, eps)) {
          c10.expect(false, *failure + " eps=" + eps.to_string());
        }
      }
    }
  }
  failed_criteria += report(10, "hypergraph kernel guarantee", c10);

  // Criterion 11: matroid axiom suite with explicit-oracle agreement.
  Criterion c11;
  {
    for (int i = 0; i < 100; ++i) {
      if (auto failure = mcvc::check_axioms_trial(kSeed + 47, i)) {
        c11.expect(false, *failure);
      }
    }
  }
  failed_criteria += report(11, "matroid axiom suite", c11);

  std::cout << (failed_criteria == 0 ? "ALL CRITERIA PASSED"
                                     : std::to_string(failed_criteria) + " CRITERIA FAILED")
            << "\n";
  return failed_criteria;
}
