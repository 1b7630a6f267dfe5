#include "majorkit/sum_max.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "majorkit/errors.hpp"

namespace majorkit {

namespace {

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw InvalidArgument("c grid must not be empty");
  for (double c : grid)
    if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidArgument("c grid values must be finite and >= 0");
}

// Shared engine for both comparisons: draw(engine, buffer) fills one sample.
template <class Draw>
SumMaxReport compare_sum_max(std::size_t n, std::size_t trials, std::uint64_t seed,
                             const std::vector<double>& grid, Draw draw) {
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  validate_grid(grid);
  const double scale = std::sqrt(static_cast<double>(n));
  const std::size_t m = grid.size();
  struct Chunk {
    std::vector<RunningStats> diff;
    std::vector<std::size_t> below_sum, below_max;
  };
  auto parts = run_chunked(trials, seed, [&](Engine& engine, std::size_t first, std::size_t last) {
    Chunk chunk{std::vector<RunningStats>(m), std::vector<std::size_t>(m, 0), std::vector<std::size_t>(m, 0)};
    std::vector<double> x(n);
    for (std::size_t t = first; t < last; ++t) {
      draw(engine, x);
      double sum = 0.0, max = 0.0;
      for (double v : x) {
        if (!(v >= 0.0)) throw NumericError("sampler produced a negative or non-finite value");
        sum += v;
        max = std::max(max, v);
      }
      for (std::size_t i = 0; i < m; ++i) {
        const bool s = sum <= grid[i];
        const bool x_max = scale * max <= grid[i];
        chunk.below_sum[i] += s;
        chunk.below_max[i] += x_max;
        chunk.diff[i].push(static_cast<double>(s) - static_cast<double>(x_max));
      }
    }
    return chunk;
  });

  SumMaxReport report;
  report.dimension = n;
  report.trials = trials;
  for (std::size_t i = 0; i < m; ++i) {
    RunningStats diff;
    std::size_t below_sum = 0, below_max = 0;
    for (const auto& p : parts) {
      diff.merge(p.diff[i]);
      below_sum += p.below_sum[i];
      below_max += p.below_max[i];
    }
    CdfComparison point;
    point.c = grid[i];
    point.p_sum = static_cast<double>(below_sum) / static_cast<double>(trials);
    point.p_max = static_cast<double>(below_max) / static_cast<double>(trials);
    point.difference = diff.mean();
    point.standard_error = diff.standard_error();
    point.violated = point.difference < -3.0 * point.standard_error;
    report.points.push_back(point);
  }
  return report;
}

double checked(double v, double x1, double x2) {
  if (!std::isfinite(v))
    throw NumericError("density is not finite at (" + std::to_string(x1) + ", " + std::to_string(x2) + ")");
  return v;
}

bool decreased(double inner, double outer) {
  return outer < inner - kProbeSlack * std::max(1.0, std::abs(inner));
}

}  // namespace

std::pair<double, double> standard_normal_pair(Engine& engine) {
  const double u1 = 1.0 - uniform01(engine);  // (0, 1]
  const double u2 = uniform01(engine);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

PairSampler abs_bivariate_normal(double rho, double sigma) {
  if (!(rho > -1.0 && rho < 1.0)) throw InvalidArgument("abs_bivariate_normal: rho must lie in (-1, 1)");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("abs_bivariate_normal: sigma must be > 0");
  const double orth = std::sqrt(1.0 - rho * rho);
  return {"abs-normal(rho=" + std::to_string(rho) + ", sigma=" + std::to_string(sigma) + ")",
          [rho, sigma, orth](Engine& engine) {
            const auto [z1, z2] = standard_normal_pair(engine);
            return std::pair{sigma * std::abs(z1), sigma * std::abs(rho * z1 + orth * z2)};
          }};
}

std::function<double(double, double)> abs_bivariate_normal_density(double rho, double sigma) {
  if (!(rho > -1.0 && rho < 1.0)) throw InvalidArgument("abs_bivariate_normal_density: rho must lie in (-1, 1)");
  if (!(sigma > 0.0)) throw InvalidArgument("abs_bivariate_normal_density: sigma must be > 0");
  const double det = 1.0 - rho * rho;
  const double norm = 2.0 / (std::numbers::pi * sigma * sigma * std::sqrt(det));
  // Folding the four sign patterns gives exp(-q) * 2 cosh(rho y1 y2 / det) / 2 per pair.
  return [=](double y1, double y2) {
    if (y1 < 0.0 || y2 < 0.0) return 0.0;
    const double a = y1 / sigma, b = y2 / sigma;
    const double q = (a * a + b * b) / (2.0 * det);
    return norm * std::exp(-q) * std::cosh(rho * a * b / det);
  };
}

std::size_t SumMaxReport::violations() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const CdfComparison& p) { return p.violated; }));
}

SumMaxReport sum_vs_max_check(const PairSampler& sampler, std::size_t trials, std::uint64_t seed,
                              const std::vector<double>& grid) {
  return compare_sum_max(2, trials, seed, grid, [&](Engine& engine, std::vector<double>& x) {
    const auto [a, b] = sampler.draw(engine);
    x[0] = a;
    x[1] = b;
  });
}

ProbeReport schur_condition_probe(const std::function<double(double, double)>& f, std::size_t resolution,
                                  double extent) {
  if (resolution < 2) throw InvalidArgument("schur_condition_probe: resolution must be >= 2");
  if (!(extent > 0.0) || !std::isfinite(extent)) throw InvalidArgument("schur_condition_probe: extent must be > 0");
  ProbeReport report;
  auto g = [&](double x1, double x2) { return checked(f(std::sqrt(x1), std::sqrt(x2)), x1, x2); };
  for (std::size_t it = 1; it <= resolution; ++it) {
    const double t = extent * static_cast<double>(it) / static_cast<double>(resolution);
    const double half = t / 2.0;
    for (int direction : {+1, -1}) {
      double inner = g(half, half);
      for (std::size_t step = 1; step <= resolution; ++step) {
        const double d = half * static_cast<double>(step) / static_cast<double>(resolution);
        const double x1 = std::max(0.0, half + direction * d);
        const double x2 = std::max(0.0, half - direction * d);
        const double outer = g(x1, x2);
        ++report.checks;
        if (decreased(inner, outer)) {
          const double prev = half * static_cast<double>(step - 1) / static_cast<double>(resolution);
          report.violations.push_back({t, prev, inner, outer});
        }
        inner = outer;
      }
    }
  }
  return report;
}

UnivariateFamily half_normal(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("half_normal: sigma must be > 0");
  const double norm = std::sqrt(2.0 / std::numbers::pi) / sigma;
  return {"half-normal(sigma=" + std::to_string(sigma) + ")",
          [=](double x) { return x < 0.0 ? 0.0 : norm * std::exp(-0.5 * (x / sigma) * (x / sigma)); },
          [=](Engine& engine) { return sigma * std::abs(standard_normal_pair(engine).first); }};
}

DensityConditions density_conditions(const std::function<double(double)>& f, double low, double high,
                                     std::size_t points) {
  if (!(low > 0.0) || !(high > low)) throw InvalidArgument("density_conditions: need 0 < low < high");
  if (points < 3) throw InvalidArgument("density_conditions: need at least 3 points");
  DensityConditions out;
  out.points = points;
  std::vector<double> x(points), log_root(points), ratio(points);
  const double step = std::log(high / low) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    x[i] = low * std::exp(step * static_cast<double>(i));
    const double root = checked(f(std::sqrt(x[i])), std::sqrt(x[i]), 0.0);
    const double fx = checked(f(x[i]), x[i], 0.0);
    log_root[i] = root > 0.0 ? std::log(root) : -std::numeric_limits<double>::infinity();
    ratio[i] = fx / x[i];
  }
  for (std::size_t i = 1; i + 1 < points; ++i) {
    // Non-uniform spacing: compare the chord slopes on either side.
    const double left = (log_root[i] - log_root[i - 1]) / (x[i] - x[i - 1]);
    const double right = (log_root[i + 1] - log_root[i]) / (x[i + 1] - x[i]);
    if (std::isfinite(left) && std::isfinite(right) &&
        right > left + kProbeSlack * std::max(1.0, std::abs(left)))
      out.concavity_failures.push_back(x[i]);
  }
  for (std::size_t i = 0; i + 1 < points; ++i)
    if (ratio[i + 1] > ratio[i] + kProbeSlack * std::max(1.0, std::abs(ratio[i]))) out.ratio_failures.push_back(x[i]);
  return out;
}

NdimReport ndim_check(const UnivariateFamily& family, std::size_t n, std::size_t trials, std::uint64_t seed,
                      const std::vector<double>& grid) {
  if (n < 2) throw InvalidArgument("ndim_check: n must be >= 2");
  NdimReport out;
  out.conditions = density_conditions(family.density);
  out.comparison = compare_sum_max(n, trials, seed, grid, [&](Engine& engine, std::vector<double>& x) {
    for (double& v : x) v = family.draw(engine);
  });
  return out;
}

}  // namespace majorkit
