#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcvc/graph.hpp"

namespace mcvc {

enum class MatroidKind { Uniform, Partition, Laminar, Transversal, Explicit };

std::string to_string(MatroidKind kind);
MatroidKind matroid_kind_from_string(const std::string& name);

// A bounded element set: a solution may hold at most `bound` of `elements`.
struct Constraint {
  VertexSet elements;
  int bound = 0;
};

// Anything that answers independence queries over ground set 0..n-1.
// Implementations are immutable after construction and safe to query
// concurrently.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;
  virtual int ground_size() const = 0;
  virtual bool is_independent(std::span<const int> s) const = 0;
};

// Concrete matroid over vertices 0..n-1. Uniform, partition, laminar and
// transversal matroids are the structured kinds; explicit matroids list
// their bases and exist for tests on tiny ground sets (n <= 20).
class Matroid final : public IndependenceOracle {
 public:
  static Matroid uniform(int n, int k);
  // Parts must be pairwise disjoint and cover 0..n-1.
  static Matroid partition(int n, std::vector<Constraint> parts);
  // Sets must form a laminar family (pairwise disjoint or nested).
  static Matroid laminar(int n, std::vector<Constraint> sets);
  static Matroid transversal(int n, std::vector<VertexSet> sets);
  // All bases must have equal cardinality; n <= 20.
  static Matroid explicit_bases(int n, std::vector<VertexSet> bases);

  MatroidKind kind() const { return kind_; }
  int ground_size() const override { return n_; }
  bool is_independent(std::span<const int> s) const override;

  int uniform_rank() const;
  const std::vector<Constraint>& parts() const;
  const std::vector<Constraint>& laminar_sets() const;
  const std::vector<VertexSet>& transversal_sets() const;
  const std::vector<VertexSet>& bases() const;

 private:
  Matroid(MatroidKind kind, int n) : kind_(kind), n_(n) {}

  bool counts_ok(std::span<const int> s, int multiplier) const;
  bool transversal_ok(std::span<const int> s, int capacity) const;

  friend class UnionView;

  MatroidKind kind_;
  int n_;
  int uniform_rank_ = 0;
  std::vector<Constraint> constraints_;     // partition / laminar
  std::vector<VertexSet> groups_;           // transversal sets / explicit bases
  std::vector<std::uint32_t> base_masks_;   // explicit only
};

// Union of `multiplier` copies of the base matroid: independent sets are
// those partitionable into `multiplier` independent sets of the base.
// Structured kinds use closed forms (scaled bounds / scaled capacities);
// explicit matroids fall back to exhaustive partition search.
class UnionView final : public IndependenceOracle {
 public:
  UnionView(const Matroid& base, int multiplier);

  const Matroid& base() const { return *base_; }
  int multiplier() const { return multiplier_; }
  int ground_size() const override { return base_->ground_size(); }
  bool is_independent(std::span<const int> s) const override;

 private:
  const Matroid* base_;
  int multiplier_;
};

// Contraction by a fixed independent set C: S is independent iff S is
// disjoint from C and S together with C is independent in the base. Composes over any
// oracle, so repeated contraction works.
class ContractView final : public IndependenceOracle {
 public:
  ContractView(const IndependenceOracle& base, VertexSet contracted);

  const VertexSet& contracted() const { return contracted_; }
  int ground_size() const override { return base_->ground_size(); }
  bool is_independent(std::span<const int> s) const override;

 private:
  const IndependenceOracle* base_;
  VertexSet contracted_;
};

// Common independent sets of two oracles. Not a matroid in general; used
// for the two-matroid search and its brute-force oracle.
class IntersectionView final : public IndependenceOracle {
 public:
  IntersectionView(const IndependenceOracle& first, const IndependenceOracle& second);

  int ground_size() const override { return first_->ground_size(); }
  bool is_independent(std::span<const int> s) const override;

 private:
  const IndependenceOracle* first_;
  const IndependenceOracle* second_;
};

// Maximum independent-set size, computed greedily in ascending index order.
int rank(const IndependenceOracle& m);

// For dependent s, returns {e in s : s - e independent}; when s is an
// independent set plus one element this is its unique circuit. Throws
// contract_error if s is independent.
VertexSet find_circuit(const IndependenceOracle& m, std::span<const int> s);

}  // namespace mcvc
