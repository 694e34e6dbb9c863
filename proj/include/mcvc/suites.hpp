#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcvc/generators.hpp"
#include "mcvc/rational.hpp"

namespace mcvc {

struct SuiteResult {
  int trials = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one per failed trial
};

// Single-trial property checks. Each returns std::nullopt on success and a
// human-readable description of the first violated property otherwise.
// Failures never throw for property violations; genuine bugs (internal
// invariant breaks) still propagate as exceptions.
std::optional<std::string> check_axioms_trial(std::uint64_t seed, int trial);
std::optional<std::string> check_kernel_trial(std::uint64_t seed, int trial, MatroidKind kind,
                                              const Rational& eps);
std::optional<std::string> check_hypergraph_kernel_trial(std::uint64_t seed, int trial,
                                                         MatroidKind kind, const Rational& eps);
std::optional<std::string> check_witness_trial(std::uint64_t seed, int trial, MatroidKind kind);
std::optional<std::string> check_ratio_trial(std::uint64_t seed, int trial);
std::optional<std::string> check_stream_trial(std::uint64_t seed, int trial, MatroidKind kind,
                                              const Rational& eps);

// Named suites for the command line: axioms | kernel | ratios | stream.
// Trials run in parallel when jobs > 1 and merge deterministically by trial
// index; on failure the offending instance is dumped next to dump_prefix.
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed, int jobs,
                      const std::string& dump_prefix);

}  // namespace mcvc
