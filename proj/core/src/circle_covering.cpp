#include "majorkit/circle_covering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "majorkit/errors.hpp"

namespace majorkit {

ArcLengths::ArcLengths(std::vector<double> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw InvalidArgument("ArcLengths: need at least one arc");
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (!std::isfinite(lengths_[i]) || lengths_[i] < 0.0)
      throw InvalidArgument("ArcLengths: length " + std::to_string(i) + " must be finite and >= 0");
    total_ += lengths_[i];
  }
}

double stevens_probability(unsigned n, double mean_length) {
  if (n < 1) throw InvalidArgument("stevens_probability: n must be >= 1");
  if (!(mean_length >= 0.0)) throw InvalidArgument("stevens_probability: mean_length must be >= 0");
  // Total length at most one cannot cover; the alternating sum would only
  // return rounding noise here.
  if (static_cast<double>(n) * mean_length <= 1.0 && mean_length < 1.0) return 0.0;

  long double sum = 0.0L;
  long double binom = 1.0L;
  for (unsigned k = 0; k <= n; ++k) {
    const long double base = 1.0L - static_cast<long double>(k) * mean_length;
    long double term = 0.0L;
    if (base > 0.0L) term = n == 1 ? 1.0L : std::pow(base, static_cast<long double>(n - 1));
    sum += (k % 2 == 0 ? 1.0L : -1.0L) * binom * term;
    binom = binom * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
  }
  return std::clamp(static_cast<double>(sum), 0.0, 1.0);
}

bool covers_circle(std::span<const double> starts, std::span<const double> lengths) {
  struct Interval {
    double lo;
    double hi;
  };
  std::vector<Interval> pieces;
  pieces.reserve(2 * starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const double len = lengths[i];
    if (len >= 1.0) return true;
    if (len <= 0.0) continue;
    const double end = starts[i] + len;
    if (end > 1.0) {
      pieces.push_back({starts[i], 1.0});
      pieces.push_back({0.0, end - 1.0});
    } else {
      pieces.push_back({starts[i], end});
    }
  }
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double reach = 0.0;
  for (const auto& p : pieces) {
    if (p.lo > reach) return false;
    reach = std::max(reach, p.hi);
  }
  return reach >= 1.0;
}

Estimate coverage_monte_carlo(const ArcLengths& arcs, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("coverage_monte_carlo: trials must be >= 1");
  const auto& lengths = arcs.lengths();
  const auto parts = run_chunked(trials, seed, [&](Engine& engine, std::size_t first, std::size_t last) {
    std::vector<double> starts(lengths.size());
    std::size_t hits = 0;
    for (std::size_t t = first; t < last; ++t) {
      for (double& s : starts) s = uniform01(engine);
      hits += covers_circle(starts, lengths) ? 1 : 0;
    }
    return hits;
  });
  std::size_t hits = 0;
  for (auto h : parts) hits += h;
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials))};
}

PairedEstimate coverage_paired(const ArcLengths& first, const ArcLengths& second,
                               std::size_t trials, std::uint64_t seed) {
  if (first.size() != second.size()) throw InvalidArgument("coverage_paired: arc counts differ");
  if (trials < 1) throw InvalidArgument("coverage_paired: trials must be >= 1");
  struct Counts {
    std::size_t a = 0, b = 0;
    RunningStats diff;
  };
  const auto parts = run_chunked(trials, seed, [&](Engine& engine, std::size_t lo, std::size_t hi) {
    Counts c;
    std::vector<double> starts(first.size());
    for (std::size_t t = lo; t < hi; ++t) {
      for (double& s : starts) s = uniform01(engine);
      const bool ca = covers_circle(starts, first.lengths());
      const bool cb = covers_circle(starts, second.lengths());
      c.a += ca;
      c.b += cb;
      c.diff.push(static_cast<double>(ca) - static_cast<double>(cb));
    }
    return c;
  });
  std::size_t a = 0, b = 0;
  RunningStats diff;
  for (const auto& c : parts) {
    a += c.a;
    b += c.b;
    diff.merge(c.diff);
  }
  const double n = static_cast<double>(trials);
  const double pa = static_cast<double>(a) / n;
  const double pb = static_cast<double>(b) / n;
  return {{pa, std::sqrt(pa * (1 - pa) / n)},
          {pb, std::sqrt(pb * (1 - pb) / n)},
          {diff.mean(), diff.standard_error()}};
}

SchurReport coverage_schur_experiment(std::size_t pairs, std::size_t n, double total,
                                      std::size_t trials, std::uint64_t seed) {
  if (!(total > 1.0)) throw InvalidArgument("coverage_schur_experiment: total must exceed 1");
  SchurReport report;
  report.trials = pairs;
  for (std::size_t i = 0; i < pairs; ++i) {
    auto pair = sample_comparable_pair(n, derive_seed(seed, 2 * i), constraint::Probability{});
    std::vector<double> upper(pair.upper.begin(), pair.upper.end());
    std::vector<double> lower(pair.lower.begin(), pair.lower.end());
    for (double& v : upper) v *= total;
    for (double& v : lower) v *= total;
    const auto est = coverage_paired(ArcLengths(upper), ArcLengths(lower), trials,
                                     derive_seed(seed, 2 * i + 1));
    const double slack = 3.0 * est.difference.standard_error;
    if (est.difference.value < -slack)
      report.record({ComparablePair{RealVec(upper), RealVec(lower)}, est.first.value,
                     est.second.value, slack});
  }
  return report;
}

}  // namespace majorkit
