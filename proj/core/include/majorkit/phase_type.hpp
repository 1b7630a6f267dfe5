#pragma once

// Phase-type distributions PH(alpha, Q): the absorption time of a
// continuous-time chain on n transient states plus one absorbing state.

#include <cstdint>

#include "majorkit/lorenz.hpp"
#include "majorkit/random.hpp"
#include "majorkit/vector_types.hpp"

namespace majorkit {

inline constexpr std::size_t kAbsorptionStepCap = 1'000'000;

class PHParams {
 public:
  // Validates q_ii < 0, q_ij >= 0 (j != i), nonpositive row sums and an
  // invertible Q. Throws InvalidArgument otherwise.
  PHParams(ProbVec alpha, SquareMatrix q);

  [[nodiscard]] std::size_t order() const noexcept { return alpha_.size(); }
  [[nodiscard]] const ProbVec& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const SquareMatrix& q() const noexcept { return q_; }
  // -sum_j q_ij
  [[nodiscard]] double absorption_rate(std::size_t i) const;

 private:
  ProbVec alpha_;
  SquareMatrix q_;
};

// Start in state 0 and pass through every state with Exp(rate) sojourns;
// the absorption time is gamma(n, rate).
[[nodiscard]] PHParams erlang(std::size_t n, double rate);

// Mixture of exponentials: start in state i with probability weights[i],
// absorb from it at rates[i].
[[nodiscard]] PHParams hyperexponential(const ProbVec& weights, std::span<const double> rates);

struct Moments {
  double mean = 0.0;
  double second = 0.0;  // E T^2
};

// E T = -alpha Q^{-1} 1 and E T^2 = 2 alpha Q^{-2} 1.
[[nodiscard]] Moments moments(const PHParams& params);

[[nodiscard]] double coefficient_of_variation(const PHParams& params);

[[nodiscard]] Sample sample_absorption(const PHParams& params, std::size_t trials,
                                       std::uint64_t seed = kDefaultSeed);

struct ErlangLorenzVerdict {
  LorenzRelation relation = LorenzRelation::equal;  // first = Erlang, second = params
  bool erlang_dominates = false;  // Erlang curve on or above within the band
  double tolerance = 0.0;         // 3 / sqrt(trials)
  double max_excess = 0.0;        // max over u of L_params(u) - L_erlang(u)
};

// Simulates PH(params) and erlang(order, erlang_rate) and compares their
// empirical Lorenz curves with a sampling band of 3/sqrt(trials).
[[nodiscard]] ErlangLorenzVerdict lorenz_vs_erlang(const PHParams& params, std::size_t trials,
                                                   std::uint64_t seed = kDefaultSeed,
                                                   double erlang_rate = 1.0);

// Random generator on n states whose every row absorbs at a rate of at least
// 5% of its total outflow.
[[nodiscard]] PHParams random_phase_type(std::size_t n, Engine& engine);

}  // namespace majorkit
