#include "mcvc/matroid.hpp"

#include <algorithm>

#include "matcher.hpp"
#include "mcvc/errors.hpp"

namespace mcvc {

std::string to_string(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::Uniform: return "uniform";
    case MatroidKind::Partition: return "partition";
    case MatroidKind::Laminar: return "laminar";
    case MatroidKind::Transversal: return "transversal";
    case MatroidKind::Explicit: return "explicit";
  }
  throw internal_error("unknown matroid kind");
}

MatroidKind matroid_kind_from_string(const std::string& name) {
  if (name == "uniform") return MatroidKind::Uniform;
  if (name == "partition") return MatroidKind::Partition;
  if (name == "laminar") return MatroidKind::Laminar;
  if (name == "transversal") return MatroidKind::Transversal;
  if (name == "explicit") return MatroidKind::Explicit;
  throw input_error("unknown matroid kind: " + name);
}

namespace {

void check_indices(const VertexSet& s, int n, const char* what) {
  for (int v : s) {
    if (v < 0 || v >= n) {
      throw input_error(std::string(what) + ": index " + std::to_string(v) + " out of range");
    }
  }
}

int intersection_size(const VertexSet& a, const VertexSet& b) {
  std::size_t i = 0, j = 0;
  int count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Can s be split into `buckets` sets, each independent in `base`?
bool partitionable(const Matroid& base, const VertexSet& s, int buckets) {
  std::vector<VertexSet> parts(static_cast<std::size_t>(buckets));
  auto rec = [&](auto&& self, std::size_t next) -> bool {
    if (next == s.size()) return true;
    int used = 0;
    while (used < buckets && !parts[static_cast<std::size_t>(used)].empty()) ++used;
    int limit = std::min(buckets, used + 1);  // empty buckets are interchangeable
    for (int b = 0; b < limit; ++b) {
      auto& part = parts[static_cast<std::size_t>(b)];
      part.push_back(s[next]);
      if (base.is_independent(part) && self(self, next + 1)) return true;
      part.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

Matroid Matroid::uniform(int n, int k) {
  if (n < 0) throw input_error("negative ground size");
  if (k < 0) throw input_error("uniform rank must be nonnegative");
  Matroid m(MatroidKind::Uniform, n);
  m.uniform_rank_ = k;
  return m;
}

Matroid Matroid::partition(int n, std::vector<Constraint> parts) {
  if (n < 0) throw input_error("negative ground size");
  Matroid m(MatroidKind::Partition, n);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (auto& part : parts) {
    part.elements = canonical_set(part.elements);
    check_indices(part.elements, n, "partition part");
    if (part.bound < 0) throw input_error("partition bound must be nonnegative");
    for (int v : part.elements) {
      if (seen[static_cast<std::size_t>(v)]) {
        throw input_error("partition parts overlap at element " + std::to_string(v));
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw input_error("partition parts do not cover element " + std::to_string(v));
    }
  }
  m.constraints_ = std::move(parts);
  return m;
}

Matroid Matroid::laminar(int n, std::vector<Constraint> sets) {
  if (n < 0) throw input_error("negative ground size");
  Matroid m(MatroidKind::Laminar, n);
  for (auto& set : sets) {
    set.elements = canonical_set(set.elements);
    check_indices(set.elements, n, "laminar set");
    if (set.elements.empty()) throw input_error("laminar set must be nonempty");
    if (set.bound < 0) throw input_error("laminar bound must be nonnegative");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      int common = intersection_size(sets[i].elements, sets[j].elements);
      std::size_t smaller = std::min(sets[i].elements.size(), sets[j].elements.size());
      if (common != 0 && static_cast<std::size_t>(common) != smaller) {
        throw input_error("sets " + std::to_string(i) + " and " + std::to_string(j) +
                          " violate laminarity");
      }
    }
  }
  m.constraints_ = std::move(sets);
  return m;
}

Matroid Matroid::transversal(int n, std::vector<VertexSet> sets) {
  if (n < 0) throw input_error("negative ground size");
  Matroid m(MatroidKind::Transversal, n);
  for (auto& set : sets) {
    set = canonical_set(set);
    check_indices(set, n, "transversal set");
  }
  m.groups_ = std::move(sets);
  return m;
}

Matroid Matroid::explicit_bases(int n, std::vector<VertexSet> bases) {
  if (n < 0) throw input_error("negative ground size");
  if (n > 20) throw input_error("explicit matroids are capped at ground size 20");
  if (bases.empty()) throw input_error("explicit matroid needs at least one base");
  Matroid m(MatroidKind::Explicit, n);
  std::size_t cardinality = canonical_set(bases.front()).size();
  for (auto& base : bases) {
    base = canonical_set(base);
    check_indices(base, n, "explicit base");
    if (base.size() != cardinality) {
      throw input_error("explicit bases must share one cardinality");
    }
    std::uint32_t mask = 0;
    for (int v : base) mask |= 1u << v;
    m.base_masks_.push_back(mask);
  }
  m.groups_ = std::move(bases);
  return m;
}

bool Matroid::counts_ok(std::span<const int> s, int multiplier) const {
  std::vector<char> in(static_cast<std::size_t>(n_), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  for (const Constraint& c : constraints_) {
    long long limit = static_cast<long long>(multiplier) * c.bound;
    long long count = 0;
    for (int v : c.elements) count += in[static_cast<std::size_t>(v)];
    if (count > limit) return false;
  }
  return true;
}

bool Matroid::transversal_ok(std::span<const int> s, int capacity) const {
  detail::CapacitatedMatcher matcher(groups_, n_, capacity);
  for (int v : s) {
    if (!matcher.add(v)) return false;
  }
  return true;
}

bool Matroid::is_independent(std::span<const int> s) const {
  VertexSet set = canonical_set(s);
  check_indices(set, n_, "is_independent");
  switch (kind_) {
    case MatroidKind::Uniform:
      return static_cast<int>(set.size()) <= uniform_rank_;
    case MatroidKind::Partition:
    case MatroidKind::Laminar:
      return counts_ok(set, 1);
    case MatroidKind::Transversal:
      return transversal_ok(set, 1);
    case MatroidKind::Explicit: {
      std::uint32_t mask = 0;
      for (int v : set) mask |= 1u << v;
      for (std::uint32_t base : base_masks_) {
        if ((mask & ~base) == 0) return true;
      }
      return false;
    }
  }
  throw internal_error("unknown matroid kind");
}

int Matroid::uniform_rank() const {
  if (kind_ != MatroidKind::Uniform) throw contract_error("not a uniform matroid");
  return uniform_rank_;
}

const std::vector<Constraint>& Matroid::parts() const {
  if (kind_ != MatroidKind::Partition) throw contract_error("not a partition matroid");
  return constraints_;
}

const std::vector<Constraint>& Matroid::laminar_sets() const {
  if (kind_ != MatroidKind::Laminar) throw contract_error("not a laminar matroid");
  return constraints_;
}

const std::vector<VertexSet>& Matroid::transversal_sets() const {
  if (kind_ != MatroidKind::Transversal) throw contract_error("not a transversal matroid");
  return groups_;
}

const std::vector<VertexSet>& Matroid::bases() const {
  if (kind_ != MatroidKind::Explicit) throw contract_error("not an explicit matroid");
  return groups_;
}

UnionView::UnionView(const Matroid& base, int multiplier)
    : base_(&base), multiplier_(multiplier) {
  if (multiplier < 1) throw input_error("union multiplier must be at least 1");
}

bool UnionView::is_independent(std::span<const int> s) const {
  VertexSet set = canonical_set(s);
  check_indices(set, base_->ground_size(), "is_independent");
  switch (base_->kind_) {
    case MatroidKind::Uniform:
      return static_cast<long long>(set.size()) <=
             static_cast<long long>(multiplier_) * base_->uniform_rank_;
    case MatroidKind::Partition:
    case MatroidKind::Laminar:
      return base_->counts_ok(set, multiplier_);
    case MatroidKind::Transversal:
      return base_->transversal_ok(set, multiplier_);
    case MatroidKind::Explicit:
      return partitionable(*base_, set, multiplier_);
  }
  throw internal_error("unknown matroid kind");
}

ContractView::ContractView(const IndependenceOracle& base, VertexSet contracted)
    : base_(&base), contracted_(canonical_set(contracted)) {
  if (!base_->is_independent(contracted_)) {
    throw input_error("contracted set must be independent in the base matroid");
  }
}

bool ContractView::is_independent(std::span<const int> s) const {
  VertexSet set = canonical_set(s);
  VertexSet merged;
  merged.reserve(set.size() + contracted_.size());
  std::size_t i = 0, j = 0;
  while (i < set.size() && j < contracted_.size()) {
    if (set[i] < contracted_[j]) {
      merged.push_back(set[i++]);
    } else if (contracted_[j] < set[i]) {
      merged.push_back(contracted_[j++]);
    } else {
      return false;  // overlaps the contracted set
    }
  }
  merged.insert(merged.end(), set.begin() + static_cast<std::ptrdiff_t>(i), set.end());
  merged.insert(merged.end(), contracted_.begin() + static_cast<std::ptrdiff_t>(j),
                contracted_.end());
  return base_->is_independent(merged);
}

IntersectionView::IntersectionView(const IndependenceOracle& first,
                                   const IndependenceOracle& second)
    : first_(&first), second_(&second) {
  if (first.ground_size() != second.ground_size()) {
    throw input_error("intersected matroids must share a ground set");
  }
}

bool IntersectionView::is_independent(std::span<const int> s) const {
  return first_->is_independent(s) && second_->is_independent(s);
}

int rank(const IndependenceOracle& m) {
  VertexSet current;
  for (int v = 0; v < m.ground_size(); ++v) {
    current.push_back(v);
    if (!m.is_independent(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

VertexSet find_circuit(const IndependenceOracle& m, std::span<const int> s) {
  VertexSet set = canonical_set(s);
  if (m.is_independent(set)) {
    throw contract_error("find_circuit requires a dependent set");
  }
  VertexSet circuit;
  VertexSet probe;
  probe.reserve(set.size());
  for (std::size_t skip = 0; skip < set.size(); ++skip) {
    probe.clear();
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i != skip) probe.push_back(set[i]);
    }
    if (m.is_independent(probe)) circuit.push_back(set[skip]);
  }
  return circuit;
}

}  // namespace mcvc
