#pragma once

// Seeded randomness and trial bookkeeping shared by every Monte Carlo routine.
//
// Trials are grouped into fixed-size chunks. Chunk c draws from an engine
// seeded with derive_seed(seed, c), so results depend only on (seed, trials)
// and never on the number of worker threads.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <span>
#include <thread>
#include <vector>

namespace majorkit {

using Engine = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20070901;
inline constexpr std::size_t kChunkTrials = 16384;

// splitmix64 finalizer over (seed, stream).
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

[[nodiscard]] inline Engine make_engine(std::uint64_t seed, std::uint64_t stream) {
  return Engine(derive_seed(seed, stream));
}

// Uniform on [0, 1) with 53 random bits.
[[nodiscard]] inline double uniform01(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

[[nodiscard]] inline double exponential(Engine& engine, double rate) {
  return -std::log1p(-uniform01(engine)) / rate;
}

[[nodiscard]] inline std::size_t uniform_index(Engine& engine, std::size_t n) {
  return static_cast<std::size_t>(uniform01(engine) * static_cast<double>(n)) % n;
}

// Inverse-CDF sampler over a finite distribution. Coordinates with zero
// weight are never returned. Two tables over the same support fed the same
// uniform give the coupled draws used for common random numbers.
class DiscreteSampler {
 public:
  DiscreteSampler() = default;
  explicit DiscreteSampler(std::span<const double> weights);

  [[nodiscard]] std::size_t operator()(double u) const;
  [[nodiscard]] std::size_t operator()(Engine& engine) const { return (*this)(uniform01(engine)); }
  [[nodiscard]] std::size_t size() const noexcept { return cumulative_.size(); }

 private:
  std::vector<double> cumulative_;
};

inline DiscreteSampler::DiscreteSampler(std::span<const double> weights) {
  cumulative_.reserve(weights.size());
  double total = 0.0;
  for (double w : weights) {
    total += w;
    cumulative_.push_back(total);
  }
  for (double& c : cumulative_) c /= total;
}

inline std::size_t DiscreteSampler::operator()(double u) const {
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  std::size_t idx = it == cumulative_.end() ? cumulative_.size() - 1
                                            : static_cast<std::size_t>(it - cumulative_.begin());
  // Skip trailing zero-weight coordinates that share the final cumulative value.
  while (idx > 0 && cumulative_[idx] == cumulative_[idx - 1]) --idx;
  return idx;
}

// A Monte Carlo mean with its standard error.
struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

// Mean and variance by Welford's update with Chan's merge.
class RunningStats {
 public:
  void push(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  void merge(const RunningStats& other) noexcept {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const double n1 = static_cast<double>(count_);
    const double n2 = static_cast<double>(other.count_);
    const double delta = other.mean_ - mean_;
    const double n = n1 + n2;
    mean_ += delta * n2 / n;
    m2_ += other.m2_ + delta * delta * n1 * n2 / n;
    count_ += other.count_;
  }

  [[nodiscard]] std::size_t count() const noexcept { return count_; }
  [[nodiscard]] double mean() const noexcept { return mean_; }
  [[nodiscard]] double variance() const noexcept {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }
  [[nodiscard]] double standard_error() const noexcept {
    return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
  }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Runs body(engine, first_trial, end_trial) once per chunk and returns the
// per-chunk results in chunk order. Chunks are spread over worker threads.
template <class Body>
auto run_chunked(std::size_t trials, std::uint64_t seed, Body&& body)
    -> std::vector<decltype(body(std::declval<Engine&>(), std::size_t{}, std::size_t{}))> {
  using Result = decltype(body(std::declval<Engine&>(), std::size_t{}, std::size_t{}));
  const std::size_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<Result> results(chunks);
  std::vector<std::exception_ptr> failures(chunks);
  auto run_one = [&](std::size_t c) {
    try {
      Engine engine = make_engine(seed, c);
      const std::size_t first = c * kChunkTrials;
      const std::size_t last = std::min(trials, first + kChunkTrials);
      results[c] = body(engine, first, last);
    } catch (...) {
      failures[c] = std::current_exception();
    }
  };
  auto rethrow_first = [&] {
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  };
  const std::size_t workers =
      std::min<std::size_t>(chunks, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_one(c);
    rethrow_first();
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += workers) run_one(c);
    });
  }
  pool.clear();
  rethrow_first();
  return results;
}

// Convenience: merge per-chunk RunningStats in chunk order.
[[nodiscard]] inline RunningStats merge_all(std::span<const RunningStats> parts) {
  RunningStats total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace majorkit
