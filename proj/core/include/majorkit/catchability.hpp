#pragma once

// Species-richness estimation from n captures: exact Stirling numbers of the
// second kind, the ratio estimator nu_hat(n, r) = S(n+1, r) / S(n, r), and
// trapping simulations under unequal catchability.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "majorkit/random.hpp"
#include "majorkit/schur_harness.hpp"
#include "majorkit/vector_types.hpp"

namespace majorkit {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned kStirlingMax = 200;

// S(n, r) for 0 <= r <= n <= kStirlingMax, from a table built once on first
// use by S(n, r) = r S(n-1, r) + S(n-1, r-1).
[[nodiscard]] const BigInt& stirling2(unsigned n, unsigned r);

// Requires 1 <= r <= n < kStirlingMax. The ratio is formed exactly and
// rounded to double once.
[[nodiscard]] double nu_hat(unsigned n, unsigned r);

struct TrapResult {
  std::vector<double> distinct_distribution;  // index r -> P(R = r), r = 0..n
  Estimate distinct_mean;
  Estimate nu_hat_mean;
};

// Each trial draws n species labels from p and records R = number of
// distinct labels and nu_hat(n, R).
[[nodiscard]] TrapResult trap_simulation(const ProbVec& p, unsigned captures, std::size_t trials,
                                         std::uint64_t seed = kDefaultSeed);

struct CatchabilityReport {
  SchurReport lower_tail;  // P(R <= r) larger under the majorizing p, every r
  SchurReport bias;        // mean nu_hat smaller under the majorizing p
};

// Draws `pairs` comparable catchability vectors over `species` species and
// runs both checks with common random numbers and 3 paired standard errors of
// slack. Requires species <= captures.
[[nodiscard]] CatchabilityReport schur_bias_experiment(unsigned species, unsigned captures,
                                                       std::size_t pairs, std::size_t trials,
                                                       std::uint64_t seed = kDefaultSeed);

}  // namespace majorkit
