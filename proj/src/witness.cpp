#include "mcvc/witness.hpp"

#include <algorithm>
#include <map>

#include "matcher.hpp"
#include "mcvc/errors.hpp"

namespace mcvc {
namespace {

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_inputs(const Matroid& m, const KernelResult& kres, const VertexSet& o) {
  if (!m.is_independent(o)) {
    throw input_error("witness construction requires an independent set o");
  }
  if (static_cast<int>(kres.degw.size()) != m.ground_size()) {
    throw input_error("kernel result does not match the matroid ground set");
  }
}

// Pools for uniform and partition matroids: inside a part whose bound
// blocked some element, every kernel vertex weight-dominates the blocked
// ones, so consecutive blocks of unused kernel vertices serve as pools.
RobustWitness partition_witness(const Matroid& m, const KernelResult& kres,
                                const VertexSet& o) {
  std::vector<Constraint> parts;
  if (m.kind() == MatroidKind::Uniform) {
    VertexSet all(static_cast<std::size_t>(m.ground_size()));
    for (int v = 0; v < m.ground_size(); ++v) all[static_cast<std::size_t>(v)] = v;
    parts.push_back(Constraint{std::move(all), m.uniform_rank()});
  } else {
    parts = m.parts();
  }

  RobustWitness witness;
  witness.base_set = o;
  const VertexSet& kernel = kres.kernel_vertices;
  for (const Constraint& part : parts) {
    VertexSet kernel_part = set_intersection(kernel, part.elements);
    VertexSet o_part = set_intersection(o, part.elements);
    VertexSet blocked = set_difference(o_part, kernel_part);
    if (blocked.empty()) continue;
    VertexSet usable = set_difference(kernel_part, o);
    std::size_t needed = blocked.size() * static_cast<std::size_t>(kres.t);
    if (usable.size() < needed) {
      throw internal_error("partition witness: part holds too few usable kernel vertices");
    }
    std::size_t cursor = 0;
    for (int u : blocked) {
      VertexSet pool(usable.begin() + static_cast<std::ptrdiff_t>(cursor),
                     usable.begin() + static_cast<std::ptrdiff_t>(cursor + kres.t));
      cursor += static_cast<std::size_t>(kres.t);
      witness.replacements.emplace_back(u, std::move(pool));
    }
  }
  return witness;
}

// Pools for transversal matroids: replay the greedy capacitated matching to
// recover which kernel vertices each transversal set absorbed, match o, and
// draw each blocked element's pool from its own set's absorbed vertices.
RobustWitness transversal_witness(const Matroid& m, const KernelResult& kres,
                                  const VertexSet& o) {
  detail::CapacitatedMatcher kernel_matcher(m.transversal_sets(), m.ground_size(), kres.tau);
  std::vector<int> order(kres.degw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return kres.degw[static_cast<std::size_t>(b)] < kres.degw[static_cast<std::size_t>(a)];
  });
  VertexSet replayed;
  for (int v : order) {
    if (kernel_matcher.add(v)) replayed.push_back(v);
  }
  std::sort(replayed.begin(), replayed.end());
  if (replayed != kres.kernel_vertices) {
    throw internal_error("transversal witness: greedy replay diverged from the kernel");
  }

  detail::CapacitatedMatcher o_matcher(m.transversal_sets(), m.ground_size(), 1);
  std::vector<int> slot_of(static_cast<std::size_t>(m.ground_size()), -1);
  for (int v : o) {
    if (!o_matcher.add(v)) {
      throw input_error("witness construction requires an independent set o");
    }
  }
  for (std::size_t a = 0; a < o_matcher.assignment().size(); ++a) {
    for (int v : o_matcher.assignment()[a]) slot_of[static_cast<std::size_t>(v)] = static_cast<int>(a);
  }

  RobustWitness witness;
  witness.base_set = o;
  VertexSet blocked = set_difference(o, kres.kernel_vertices);
  for (int u : blocked) {
    int a = slot_of[static_cast<std::size_t>(u)];
    VertexSet pool = canonical_set(kernel_matcher.assignment()[static_cast<std::size_t>(a)]);
    pool = set_difference(pool, o);
    if (static_cast<int>(pool.size()) < kres.t) {
      throw internal_error("transversal witness: blocked set lacks t usable vertices");
    }
    pool.resize(static_cast<std::size_t>(kres.t));
    witness.replacements.emplace_back(u, std::move(pool));
  }
  return witness;
}

// State of the laminar pool constructor, kept together so the invariant
// checks can see everything.
struct LaminarState {
  const LaminarTree* tree;
  int t;
  std::vector<long long> booked;            // s_i
  std::vector<int> blocked_count;           // b_i
  std::vector<char> fully_booked;
  std::vector<char> usable;                 // per vertex, kernel members only
  std::vector<VertexSet> node_kernel;       // kernel vertices inside each node
  std::vector<char> saturated;

  int usable_in(int node) const {
    int count = 0;
    for (int v : node_kernel[static_cast<std::size_t>(node)]) {
      count += usable[static_cast<std::size_t>(v)];
    }
    return count;
  }

  bool under_fully_booked(int node) const {
    for (int id = node; id != -1; id = tree->node(id).parent) {
      if (fully_booked[static_cast<std::size_t>(id)]) return true;
    }
    return false;
  }

  long long blocked_in_subtree(int node) const {
    long long total = blocked_count[static_cast<std::size_t>(node)];
    const LaminarNode& nd = tree->node(node);
    if (nd.left != -1) total += blocked_in_subtree(nd.left);
    if (nd.right != -1) total += blocked_in_subtree(nd.right);
    return total;
  }

  // Bound slack: every node must keep room for its booked selections plus
  // all blocked elements still waiting below it.
  void check_capacity_invariant() const {
    for (int id = 0; id < tree->node_count(); ++id) {
      if (booked[static_cast<std::size_t>(id)] + blocked_in_subtree(id) >
          tree->node(id).bound) {
        throw internal_error("laminar witness: node capacity invariant violated");
      }
    }
  }

  // Supply: a saturated node outside fully-booked territory must hold at
  // least 2t * (bound - booked) usable vertices.
  void check_supply_invariant() const {
    for (int id = 0; id < tree->node_count(); ++id) {
      if (!saturated[static_cast<std::size_t>(id)]) continue;
      if (under_fully_booked(id)) continue;
      long long slack = tree->node(id).bound - booked[static_cast<std::size_t>(id)];
      if (usable_in(id) < 2ll * t * slack) {
        throw internal_error("laminar witness: node supply invariant violated");
      }
    }
  }
};

}  // namespace

RobustWitness laminar_robust_witness(const WeightedGraph& g, const Matroid& m,
                                     const KernelResult& kres, const VertexSet& o_raw) {
  if (m.kind() != MatroidKind::Laminar) {
    throw input_error("laminar_robust_witness requires a laminar matroid");
  }
  if (g.vertex_count() != m.ground_size()) {
    throw input_error("graph and matroid disagree on the vertex count");
  }
  const VertexSet o = canonical_set(o_raw);
  check_inputs(m, kres, o);
  if (kres.tau != 2 * kres.t) {
    throw contract_error("laminar witness requires a kernel built with multiplier 2t");
  }

  LaminarTree tree = build_laminar_tree(m);
  const int nodes = tree.node_count();

  LaminarState st;
  st.tree = &tree;
  st.t = kres.t;
  st.booked.assign(static_cast<std::size_t>(nodes), 0);
  st.blocked_count.assign(static_cast<std::size_t>(nodes), 0);
  st.fully_booked.assign(static_cast<std::size_t>(nodes), 0);
  st.usable.assign(static_cast<std::size_t>(m.ground_size()), 0);
  st.node_kernel.assign(static_cast<std::size_t>(nodes), {});
  st.saturated.assign(static_cast<std::size_t>(nodes), 0);

  const VertexSet& kernel = kres.kernel_vertices;
  VertexSet o_in = set_intersection(o, kernel);
  for (int id = 0; id < nodes; ++id) {
    st.node_kernel[static_cast<std::size_t>(id)] =
        set_intersection(kernel, tree.node(id).elements);
    st.saturated[static_cast<std::size_t>(id)] =
        static_cast<long long>(st.node_kernel[static_cast<std::size_t>(id)].size()) ==
        2ll * kres.t * tree.node(id).bound;
    st.booked[static_cast<std::size_t>(id)] = static_cast<long long>(
        set_intersection(st.node_kernel[static_cast<std::size_t>(id)], o_in).size());
  }
  for (int v : kernel) st.usable[static_cast<std::size_t>(v)] = 1;
  for (int v : o_in) st.usable[static_cast<std::size_t>(v)] = 0;

  // A node whose bound is already exhausted by kernel members of o is
  // fully booked from
  // the start; its remaining kernel vertices must not feed any pool.
  for (int id = 0; id < nodes; ++id) {
    if (st.booked[static_cast<std::size_t>(id)] == tree.node(id).bound) {
      st.fully_booked[static_cast<std::size_t>(id)] = 1;
      for (int v : st.node_kernel[static_cast<std::size_t>(id)]) {
        st.usable[static_cast<std::size_t>(v)] = 0;
      }
    }
  }

  // Blocked elements attach to the deepest saturated node on their
  // root-to-leaf path.
  std::map<int, VertexSet> blocked_at;
  for (int u : set_difference(o, kernel)) {
    int blocking = -1;
    for (int id : tree.path_to_root(u)) {  // leaf upwards
      if (st.saturated[static_cast<std::size_t>(id)]) {
        blocking = id;
        break;
      }
    }
    if (blocking == -1) {
      throw internal_error("laminar witness: rejected element without a saturated node");
    }
    blocked_at[blocking].push_back(u);
    ++st.blocked_count[static_cast<std::size_t>(blocking)];
  }

  st.check_capacity_invariant();

  RobustWitness witness;
  witness.base_set = o;
  while (!blocked_at.empty()) {
    st.check_supply_invariant();
    // Deepest pending node; ties fall to the smallest node id.
    int node = -1;
    for (const auto& [id, list] : blocked_at) {
      if (node == -1 || tree.node(id).depth > tree.node(node).depth) node = id;
    }
    VertexSet& pending = blocked_at[node];
    int u = pending.front();
    pending.erase(pending.begin());
    --st.blocked_count[static_cast<std::size_t>(node)];
    if (pending.empty()) blocked_at.erase(node);

    // Descend while a child still holds t usable vertices; smaller node id
    // first.
    int target = node;
    for (;;) {
      const LaminarNode& nd = tree.node(target);
      int next = -1;
      if (nd.left != -1 && st.usable_in(nd.left) >= kres.t) {
        next = nd.left;
      } else if (nd.right != -1 && st.usable_in(nd.right) >= kres.t) {
        next = nd.right;
      }
      if (next == -1) break;
      target = next;
    }

    VertexSet pool;
    for (int v : st.node_kernel[static_cast<std::size_t>(target)]) {
      if (st.usable[static_cast<std::size_t>(v)]) pool.push_back(v);
    }
    if (static_cast<int>(pool.size()) < kres.t) {
      throw internal_error("laminar witness: allocation node holds fewer than t usable vertices");
    }
    for (int v : pool) st.usable[static_cast<std::size_t>(v)] = 0;
    pool.resize(static_cast<std::size_t>(kres.t));  // keep the t lowest indices
    witness.replacements.emplace_back(u, std::move(pool));

    for (int id = target; id != -1; id = tree.node(id).parent) {
      if (++st.booked[static_cast<std::size_t>(id)] == tree.node(id).bound &&
          !st.fully_booked[static_cast<std::size_t>(id)]) {
        st.fully_booked[static_cast<std::size_t>(id)] = 1;
        for (int v : st.node_kernel[static_cast<std::size_t>(id)]) {
          st.usable[static_cast<std::size_t>(v)] = 0;
        }
      }
    }
    st.check_capacity_invariant();
  }

  std::sort(witness.replacements.begin(), witness.replacements.end());
  return witness;
}

RobustWitness build_robust_witness(const WeightedGraph& g, const Matroid& m,
                                   const KernelResult& kres, const VertexSet& o_raw) {
  if (g.vertex_count() != m.ground_size()) {
    throw input_error("graph and matroid disagree on the vertex count");
  }
  const VertexSet o = canonical_set(o_raw);
  check_inputs(m, kres, o);
  switch (m.kind()) {
    case MatroidKind::Uniform:
    case MatroidKind::Partition:
      return partition_witness(m, kres, o);
    case MatroidKind::Laminar:
      return laminar_robust_witness(g, m, kres, o);
    case MatroidKind::Transversal:
      return transversal_witness(m, kres, o);
    case MatroidKind::Explicit:
      break;
  }
  throw unsupported_error("robustness witnesses exist for uniform, partition, laminar and "
                          "transversal matroids only");
}

bool witness_valid(const Matroid& m, const KernelResult& kres, const VertexSet& o,
                   const RobustWitness& witness, std::int64_t exhaustive_cap,
                   int sample_count, std::uint64_t seed) {
  const VertexSet o_sorted = canonical_set(o);
  const VertexSet& kernel = kres.kernel_vertices;
  VertexSet expected_blocked = set_difference(o_sorted, kernel);
  VertexSet mapped;
  for (const auto& [u, pool] : witness.replacements) mapped.push_back(u);
  std::sort(mapped.begin(), mapped.end());
  if (mapped != expected_blocked) return false;

  // Condition (i): pools of size exactly t, pairwise disjoint, inside the
  // kernel, avoiding o.
  std::vector<char> taken(static_cast<std::size_t>(m.ground_size()), 0);
  for (const auto& [u, pool] : witness.replacements) {
    if (static_cast<int>(pool.size()) != kres.t) return false;
    for (int v : pool) {
      if (v < 0 || v >= m.ground_size()) return false;
      if (!set_contains(kernel, v)) return false;
      if (set_contains(o_sorted, v)) return false;
      if (taken[static_cast<std::size_t>(v)]) return false;
      taken[static_cast<std::size_t>(v)] = 1;
    }
  }

  // Condition (ii): weighted-degree domination.
  for (const auto& [u, pool] : witness.replacements) {
    for (int v : pool) {
      if (kres.degw[static_cast<std::size_t>(v)] < kres.degw[static_cast<std::size_t>(u)]) {
        return false;
      }
    }
  }

  // Condition (iii): every one-per-pool selection extends the kernel part
  // of o independently.
  VertexSet o_in = set_intersection(o_sorted, kernel);
  const std::size_t pools = witness.replacements.size();
  if (pools == 0) return true;

  __int128 combos = 1;
  bool exhaustive = true;
  for (const auto& [u, pool] : witness.replacements) {
    combos *= static_cast<__int128>(pool.size());
    if (combos > exhaustive_cap) {
      exhaustive = false;
      break;
    }
  }

  auto check_choice = [&](const std::vector<std::size_t>& choice) {
    VertexSet candidate = o_in;
    for (std::size_t i = 0; i < pools; ++i) {
      candidate.push_back(witness.replacements[i].second[choice[i]]);
    }
    return m.is_independent(candidate);
  };

  if (exhaustive) {
    std::vector<std::size_t> choice(pools, 0);
    for (;;) {
      if (!check_choice(choice)) return false;
      std::size_t i = 0;
      while (i < pools) {
        if (++choice[i] < witness.replacements[i].second.size()) break;
        choice[i] = 0;
        ++i;
      }
      if (i == pools) break;
    }
    return true;
  }

  std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::vector<std::size_t> choice(pools, 0);
  for (int trial = 0; trial < sample_count; ++trial) {
    for (std::size_t i = 0; i < pools; ++i) {
      choice[i] = static_cast<std::size_t>(next() % witness.replacements[i].second.size());
    }
    if (!check_choice(choice)) return false;
  }
  return true;
}

bool verify_robustness(const WeightedGraph& g, const Matroid& m, const KernelResult& kres,
                       const VertexSet& o) {
  RobustWitness witness = build_robust_witness(g, m, kres, canonical_set(o));
  return witness_valid(m, kres, canonical_set(o), witness);
}

}  // namespace mcvc
