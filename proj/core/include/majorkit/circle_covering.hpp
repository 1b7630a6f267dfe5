#pragma once

// Covering the unit-circumference circle with independently, uniformly
// placed arcs.

#include <cstdint>
#include <vector>

#include "majorkit/schur_harness.hpp"

namespace majorkit {

// Nonnegative arc lengths measured in circumferences.
class ArcLengths {
 public:
  explicit ArcLengths(std::vector<double> lengths);
  [[nodiscard]] std::size_t size() const noexcept { return lengths_.size(); }
  [[nodiscard]] const std::vector<double>& lengths() const noexcept { return lengths_; }
  [[nodiscard]] double total() const noexcept { return total_; }

 private:
  std::vector<double> lengths_;
  double total_ = 0.0;
};

// Stevens' formula for n arcs of common length mean_length:
//   sum_{k=0}^{n} (-1)^k C(n,k) (1 - k*mean_length)_+^{n-1},
// with (t)_+^0 = 1 for t > 0 and 0 otherwise; clamped to [0, 1].
[[nodiscard]] double stevens_probability(unsigned n, double mean_length);

// True iff arcs [start_i, start_i + length_i) mod 1 leave no gap.
[[nodiscard]] bool covers_circle(std::span<const double> starts, std::span<const double> lengths);

[[nodiscard]] Estimate coverage_monte_carlo(const ArcLengths& arcs, std::size_t trials,
                                            std::uint64_t seed = kDefaultSeed);

struct PairedEstimate {
  Estimate first;
  Estimate second;
  Estimate difference;  // first - second, per-trial paired
};

// Both arc vectors see the same start positions in every trial.
[[nodiscard]] PairedEstimate coverage_paired(const ArcLengths& first, const ArcLengths& second,
                                             std::size_t trials, std::uint64_t seed = kDefaultSeed);

// Schur convexity of the coverage probability in the arc lengths: draws
// `pairs` comparable length vectors of dimension n with the given total and
// flags estimate(upper) < estimate(lower) - 3 * paired standard error.
[[nodiscard]] SchurReport coverage_schur_experiment(std::size_t pairs, std::size_t n, double total,
                                                    std::size_t trials,
                                                    std::uint64_t seed = kDefaultSeed);

}  // namespace majorkit
