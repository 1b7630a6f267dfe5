#include "majorkit/pattern_waiting.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "majorkit/errors.hpp"
#include "majorkit/random.hpp"

namespace majorkit {

namespace {

// Dense elimination is used up to this many transient states; beyond it the
// (k+1)-nonzeros-per-row system goes through a sparse LU.
constexpr std::size_t kDenseLimit = 2000;

std::uint64_t encode(const SuffixState& s, std::size_t k) {
  std::uint64_t code = 0;
  for (auto v : s) code = code * (k + 1) + (v + 1);
  return code;
}

void extend(std::vector<SuffixState>& out, SuffixState& prefix, std::vector<bool>& used,
            std::size_t k, std::size_t length) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t v = 0; v < k; ++v) {
    if (used[v]) continue;
    used[v] = true;
    prefix.push_back(static_cast<std::uint8_t>(v));
    extend(out, prefix, used, k, length);
    prefix.pop_back();
    used[v] = false;
  }
}

}  // namespace

SuffixState next_suffix(const SuffixState& state, std::uint8_t symbol) {
  auto it = std::find(state.begin(), state.end(), symbol);
  SuffixState out(it == state.end() ? state.begin() : it + 1, state.end());
  out.push_back(symbol);
  return out;
}

std::size_t SuffixChain::index_of(const SuffixState& s) const {
  const auto code = encode(s, probs_.size());
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) throw InvalidArgument("SuffixChain: unknown state");
  return code_index_[static_cast<std::size_t>(it - codes_.begin())];
}

SuffixChain build_chain(const ProbVec& p) {
  const std::size_t k = p.size();
  if (k > kMaxExactSymbols)
    throw SizeError("build_chain: " + std::to_string(k) + " symbols exceeds the exact limit of " +
                    std::to_string(kMaxExactSymbols) + "; use waiting_monte_carlo");

  SuffixChain chain;
  chain.probs_ = p.vector();
  std::vector<bool> used(k, false);
  SuffixState prefix;
  for (std::size_t len = 0; len <= k; ++len) {
    if (len == k) chain.transient_ = chain.states_.size();
    extend(chain.states_, prefix, used, k, len);
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  keyed.reserve(chain.states_.size());
  for (std::size_t i = 0; i < chain.states_.size(); ++i) keyed.emplace_back(encode(chain.states_[i], k), i);
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [code, idx] : keyed) {
    chain.codes_.push_back(code);
    chain.code_index_.push_back(idx);
  }

  chain.next_.resize(chain.transient_ * k);
  for (std::size_t i = 0; i < chain.transient_; ++i)
    for (std::size_t v = 0; v < k; ++v)
      chain.next_[i * k + v] = chain.index_of(next_suffix(chain.states_[i], static_cast<std::uint8_t>(v)));
  return chain;
}

double expected_waiting(const SuffixChain& chain) {
  const auto probs = chain.probabilities();
  for (std::size_t v = 0; v < probs.size(); ++v)
    if (!(probs[v] > 0.0))
      throw NumericError("expected_waiting: symbol " + std::to_string(v) +
                         " has probability zero, so the waiting time is infinite");

  const std::size_t m = chain.transient_count();
  const std::size_t k = chain.symbols();
  // (I - P_TT) e = 1
  Eigen::VectorXd rhs = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m));
  Eigen::VectorXd sol;
  if (m <= kDenseLimit) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t v = 0; v < k; ++v) {
        const std::size_t j = chain.next(i, v);
        if (j < m) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -= probs[v];
      }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    sol = lu.solve(rhs);
    // One step of iterative refinement; skewed p makes the system ill conditioned.
    sol += lu.solve(rhs - a * sol);
  } else {
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(m * (k + 1));
    for (std::size_t i = 0; i < m; ++i) {
      entries.emplace_back(static_cast<int>(i), static_cast<int>(i), 1.0);
      for (std::size_t v = 0; v < k; ++v) {
        const std::size_t j = chain.next(i, v);
        if (j < m) entries.emplace_back(static_cast<int>(i), static_cast<int>(j), -probs[v]);
      }
    }
    Eigen::SparseMatrix<double> a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    a.setFromTriplets(entries.begin(), entries.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success) throw NumericError("expected_waiting: factorization failed");
    sol = lu.solve(rhs);
    sol += lu.solve(rhs - a * sol);
  }
  const double e = sol(0);
  if (!std::isfinite(e) || e < 0.0) throw NumericError("expected_waiting: singular system");
  return e;
}

double expected_waiting(const ProbVec& p) { return expected_waiting(build_chain(p)); }

std::vector<double> tail_probabilities(const SuffixChain& chain, std::size_t max_n) {
  const std::size_t m = chain.transient_count();
  const std::size_t k = chain.symbols();
  const auto probs = chain.probabilities();
  std::vector<double> mass(m, 0.0), next(m, 0.0);
  mass[0] = 1.0;
  std::vector<double> out;
  out.reserve(max_n + 1);
  out.push_back(1.0);
  for (std::size_t step = 1; step <= max_n; ++step) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      if (mass[i] == 0.0) continue;
      for (std::size_t v = 0; v < k; ++v) {
        const std::size_t j = chain.next(i, v);
        if (j < m) next[j] += mass[i] * probs[v];
      }
    }
    mass.swap(next);
    double remaining = 0.0;
    for (double x : mass) remaining += x;
    out.push_back(std::clamp(remaining, 0.0, 1.0));
  }
  return out;
}

double tail_probability(const ProbVec& p, std::size_t n) {
  return tail_probabilities(build_chain(p), n).back();
}

Estimate waiting_monte_carlo(const ProbVec& p, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("waiting_monte_carlo: trials must be >= 1");
  for (std::size_t v = 0; v < p.size(); ++v)
    if (!(p[v] > 0.0))
      throw InvalidArgument("waiting_monte_carlo: symbol " + std::to_string(v) +
                            " has probability zero; the stream would never terminate");

  const std::size_t k = p.size();
  const DiscreteSampler draw(p.values());
  const auto parts = run_chunked(trials, seed, [&](Engine& engine, std::size_t lo, std::size_t hi) {
    RunningStats stats;
    std::vector<std::size_t> last_seen(k);
    for (std::size_t t = lo; t < hi; ++t) {
      // Positions are 1-based; last_seen == 0 means "not seen yet".
      std::fill(last_seen.begin(), last_seen.end(), 0);
      std::size_t run_start = 1;
      std::size_t time = 0;
      while (true) {
        if (++time > kWaitingStepCap)
          throw CapExceeded("waiting_monte_carlo: exceeded " + std::to_string(kWaitingStepCap) +
                            " observations in one trial");
        const std::size_t v = draw(engine);
        if (last_seen[v] >= run_start) run_start = last_seen[v] + 1;
        last_seen[v] = time;
        if (time - run_start + 1 == k) break;
      }
      stats.push(static_cast<double>(time));
    }
    return stats;
  });
  const auto total = merge_all(parts);
  return {total.mean(), total.standard_error()};
}

}  // namespace majorkit
