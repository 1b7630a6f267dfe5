#pragma once

// Random functional graph: node i sends one arc to X(i), drawn independently
// with P(X(i) = j) = p_j. M counts the connected components of the underlying
// undirected graph.

#include <cstdint>
#include <vector>

#include "majorkit/random.hpp"
#include "majorkit/schur_harness.hpp"
#include "majorkit/vector_types.hpp"

namespace majorkit {

inline constexpr std::size_t kMaxExactGraphNodes = 22;
inline constexpr double kGraphSlack = 1e-10;

// E(M) = sum over nonempty subsets S of (|S| - 1)! prod_{j in S} p_j.
// Throws SizeError for n > 22; use expected_components_mc instead.
[[nodiscard]] double expected_components_exact(const ProbVec& p);

// targets[i] is the 0-based endpoint of the arc leaving node i.
[[nodiscard]] std::size_t count_components(const std::vector<std::size_t>& targets);

[[nodiscard]] Estimate expected_components_mc(const ProbVec& p, std::size_t trials,
                                              std::uint64_t seed = kDefaultSeed);

struct GraphSchurReport {
  SchurReport report;
  double uniform_value = 0.0;
  bool uniform_maximal = true;  // uniform p beat every sampled vector
};

// Comparable probability pairs; flags E(M)(lower) < E(M)(upper) - 1e-10.
[[nodiscard]] GraphSchurReport schur_concavity_check(std::size_t n, std::size_t pairs,
                                                     std::uint64_t seed = kDefaultSeed);

}  // namespace majorkit
