#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gconf/bounds.hpp"
#include "gconf/graph.hpp"

// Self-check suites shared by the `verify` subcommand and the acceptance
// binary. The exhaustive oracles here are deliberately naive and share no
// code with the searches they check.
namespace gconf::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0 means unbounded

  [[nodiscard]] bool ok() const noexcept { return passed && (limit_seconds <= 0.0 || seconds < limit_seconds); }
};

/// Minimum (4/3)s + 2t + |leftover| over every family of disjoint P2/P3 subgraphs.
Rational exhaustive_cover_exponent(const WeightedGraph& g);

/// Largest set of pairwise disjoint edges, by include/exclude enumeration.
std::size_t exhaustive_matching_size(const WeightedGraph& g);

/// Erdos-Renyi graph with the given edge probability and unit weights.
WeightedGraph random_graph(std::size_t vertices, double edge_probability, std::uint64_t seed);

CheckResult geometry_lemmas(std::size_t instances, std::uint64_t seed);
CheckResult oracle_equivalence(std::size_t cases, std::uint64_t seed);
CheckResult construction_fidelity();
std::vector<CheckResult> exponent_recovery();
CheckResult recurrence_identity();
CheckResult decomposition_oracles(std::size_t graphs, std::uint64_t seed);
CheckResult catalog_fixed_points();
CheckResult determinism_roundtrip(std::uint64_t seed);

/// Every suite; `quick` shrinks instance counts and skips exponent recovery.
std::vector<CheckResult> run_all(bool quick, const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace gconf::verify
