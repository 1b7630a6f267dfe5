#pragma once

// Sum versus scaled maximum: for nonnegative (X_1, ..., X_n) with a suitable
// density, sum X_i is stochastically smaller than sqrt(n) max X_i, i.e.
// P(sum <= c) >= P(sqrt(n) max <= c) for every c.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "majorkit/random.hpp"

namespace majorkit {

inline constexpr double kProbeSlack = 1e-9;
inline constexpr double kProbeLow = 1e-3;
inline constexpr double kProbeHigh = 10.0;
inline constexpr std::size_t kProbePoints = 400;

// A standard normal pair by Box-Muller, written out so draws do not depend on
// the standard library's distribution implementation.
[[nodiscard]] std::pair<double, double> standard_normal_pair(Engine& engine);

struct PairSampler {
  std::string name;
  std::function<std::pair<double, double>(Engine&)> draw;
};

// (|Y_1|, |Y_2|) with Y bivariate normal, unit correlation rho, common scale sigma.
[[nodiscard]] PairSampler abs_bivariate_normal(double rho, double sigma = 1.0);

// Joint density of abs_bivariate_normal(rho, sigma) on the nonnegative quadrant.
[[nodiscard]] std::function<double(double, double)> abs_bivariate_normal_density(double rho,
                                                                                double sigma = 1.0);

struct CdfComparison {
  double c = 0.0;
  double p_sum = 0.0;      // P(sum <= c)
  double p_max = 0.0;      // P(sqrt(n) max <= c)
  double difference = 0.0; // p_sum - p_max, expected >= 0
  double standard_error = 0.0;
  bool violated = false;   // difference < -3 standard errors
};

struct SumMaxReport {
  std::size_t dimension = 2;
  std::size_t trials = 0;
  std::vector<CdfComparison> points;

  [[nodiscard]] std::size_t violations() const noexcept;
  [[nodiscard]] bool holds() const noexcept { return violations() == 0; }
};

inline const std::vector<double> kDefaultCGrid{0.5, 1.0, 1.5, 2.0, 3.0};

// Both statistics come from the same draws (common random numbers).
[[nodiscard]] SumMaxReport sum_vs_max_check(const PairSampler& sampler, std::size_t trials,
                                            std::uint64_t seed = kDefaultSeed,
                                            const std::vector<double>& grid = kDefaultCGrid);

struct ProbeViolation {
  double t = 0.0;       // the line x1 + x2 = t
  double offset = 0.0;  // |x1 - x2| / 2 at the inner point of the failing step
  double inner = 0.0;   // g nearer the diagonal
  double outer = 0.0;   // g one step further out
};

struct ProbeReport {
  std::size_t checks = 0;
  std::vector<ProbeViolation> violations;

  [[nodiscard]] bool passes() const noexcept { return violations.empty(); }
};

// Checks that g(x1, x2) = f(sqrt x1, sqrt x2) is nondecreasing as (x1, x2)
// slides away from the diagonal along x1 + x2 = t, in both directions, for
// `resolution` values of t in (0, extent] and `resolution` steps per half
// line. Throws NumericError if f is non-finite on the grid.
[[nodiscard]] ProbeReport schur_condition_probe(const std::function<double(double, double)>& f,
                                                std::size_t resolution = 60, double extent = 8.0);

struct UnivariateFamily {
  std::string name;
  std::function<double(double)> density;
  std::function<double(Engine&)> draw;
};

[[nodiscard]] UnivariateFamily half_normal(double sigma = 1.0);

struct DensityConditions {
  std::size_t points = 0;
  // Grid points where log f(sqrt x) has a positive second difference.
  std::vector<double> concavity_failures;
  // Grid points where f(x)/x increases to the next point.
  std::vector<double> ratio_failures;

  [[nodiscard]] bool passes() const noexcept {
    return concavity_failures.empty() && ratio_failures.empty();
  }
};

// Probes on `points` geometrically spaced x in [low, high].
[[nodiscard]] DensityConditions density_conditions(const std::function<double(double)>& f,
                                                   double low = kProbeLow, double high = kProbeHigh,
                                                   std::size_t points = kProbePoints);

struct NdimReport {
  DensityConditions conditions;
  SumMaxReport comparison;

  [[nodiscard]] bool holds() const noexcept { return conditions.passes() && comparison.holds(); }
};

// i.i.d. X_1..X_n from the family: density conditions plus the empirical
// comparison of sum X_i against sqrt(n) max X_i on the grid.
[[nodiscard]] NdimReport ndim_check(const UnivariateFamily& family, std::size_t n, std::size_t trials,
                                    std::uint64_t seed = kDefaultSeed,
                                    const std::vector<double>& grid = kDefaultCGrid);

}  // namespace majorkit
