#include "majorkit/random_graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "majorkit/errors.hpp"

namespace majorkit {

namespace {

// Neumaier's compensated sum.
double compensated_sum(const std::vector<double>& terms) {
  double sum = 0.0, carry = 0.0;
  for (double t : terms) {
    const double s = sum + t;
    carry += std::abs(sum) >= std::abs(t) ? (sum - s) + t : (t - s) + sum;
    sum = s;
  }
  return sum + carry;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), count_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --count_;
  }
  [[nodiscard]] std::size_t count() const noexcept { return count_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
  std::size_t count_;
};

}  // namespace

double expected_components_exact(const ProbVec& p) {
  const std::size_t n = p.size();
  if (n > kMaxExactGraphNodes)
    throw SizeError("expected_components_exact: n = " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxExactGraphNodes) + "; use the Monte Carlo estimate");
  std::vector<double> factorial(n + 1, 1.0);
  for (std::size_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * static_cast<double>(i);

  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<double> product(subsets, 1.0);
  std::vector<double> terms;
  terms.reserve(subsets - 1);
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    // Extend the product of mask without its lowest bit.
    const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
    product[mask] = product[mask & (mask - 1)] * p[low];
    if (product[mask] == 0.0) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    terms.push_back(factorial[size - 1] * product[mask]);
  }
  std::sort(terms.begin(), terms.end(), std::greater<>());
  return std::clamp(compensated_sum(terms), 1.0, static_cast<double>(n));
}

std::size_t count_components(const std::vector<std::size_t>& targets) {
  const std::size_t n = targets.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (targets[i] >= n)
      throw InvalidArgument("count_components: arc from node " + std::to_string(i) + " points outside the graph");
    sets.unite(i, targets[i]);
  }
  return sets.count();
}

Estimate expected_components_mc(const ProbVec& p, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("expected_components_mc: trials must be >= 1");
  const DiscreteSampler draw(p.values());
  const std::size_t n = p.size();
  auto parts = run_chunked(trials, seed, [&](Engine& engine, std::size_t first, std::size_t last) {
    RunningStats stats;
    std::vector<std::size_t> targets(n);
    for (std::size_t t = first; t < last; ++t) {
      for (auto& x : targets) x = draw(engine);
      stats.push(static_cast<double>(count_components(targets)));
    }
    return stats;
  });
  const RunningStats total = merge_all(parts);
  return {total.mean(), total.standard_error()};
}

GraphSchurReport schur_concavity_check(std::size_t n, std::size_t pairs, std::uint64_t seed) {
  if (n < 1 || n > kMaxExactGraphNodes)
    throw SizeError("schur_concavity_check: n must lie in [1, " + std::to_string(kMaxExactGraphNodes) + "]");
  GraphSchurReport out;
  out.uniform_value = expected_components_exact(ProbVec::uniform(n));
  out.report.trials = pairs;
  for (std::size_t t = 0; t < pairs; ++t) {
    ComparablePair pair = sample_comparable_pair(n, derive_seed(seed, t), constraint::Probability{});
    const double upper = expected_components_exact(ProbVec(pair.upper.vector()));
    const double lower = expected_components_exact(ProbVec(pair.lower.vector()));
    if (lower < upper - kGraphSlack) out.report.record({std::move(pair), upper, lower, kGraphSlack});
    if (std::max(upper, lower) > out.uniform_value + kGraphSlack) out.uniform_maximal = false;
  }
  return out;
}

}  // namespace majorkit
