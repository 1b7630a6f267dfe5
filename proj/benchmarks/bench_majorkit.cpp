#include <benchmark/benchmark.h>

#include "majorkit/majorkit.hpp"

using namespace majorkit;

static void BM_Majorizes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComparablePair pair = sample_comparable_pair(n, 7, constraint::None{});
  for (auto _ : state) benchmark::DoNotOptimize(majorizes(pair.upper, pair.lower));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Majorizes)->RangeMultiplier(4)->Range(8, 8 << 10)->Complexity();

static void BM_Witness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComparablePair pair = sample_comparable_pair(n, 11, constraint::Nonnegative{});
  for (auto _ : state) benchmark::DoNotOptimize(doubly_stochastic_witness(pair.upper, pair.lower));
}
BENCHMARK(BM_Witness)->Arg(8)->Arg(32)->Arg(128);

static void BM_RelativeMajorizes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComparablePair pair = sample_comparable_pair(n, 3, constraint::Probability{});
  const ProbVec q(pair.upper.vector()), p(pair.lower.vector());
  const ProbVec s = ProbVec::uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(relative_majorizes(p, q, s));
}
BENCHMARK(BM_RelativeMajorizes)->DenseRange(2, 12, 2);

static void BM_ExpectedWaiting(benchmark::State& state) {
  const ProbVec p = ProbVec::uniform(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expected_waiting(p));
}
BENCHMARK(BM_ExpectedWaiting)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_ExpectedComponents(benchmark::State& state) {
  const ProbVec p = ProbVec::uniform(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expected_components_exact(p));
}
BENCHMARK(BM_ExpectedComponents)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_CoverageMonteCarlo(benchmark::State& state) {
  const ArcLengths arcs({0.3, 0.4, 0.5, 0.3});
  for (auto _ : state) benchmark::DoNotOptimize(coverage_monte_carlo(arcs, 100000, 1));
}
BENCHMARK(BM_CoverageMonteCarlo)->Unit(benchmark::kMillisecond);

static void BM_Stirling(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nu_hat(static_cast<unsigned>(state.range(0)), 10));
}
BENCHMARK(BM_Stirling)->Arg(20)->Arg(100)->Arg(199);

static void BM_Apportion(benchmark::State& state) {
  std::vector<double> votes;
  for (int i = 1; i <= 8; ++i) votes.push_back(1000.0 / i + i);
  const Election e{votes, static_cast<unsigned long>(state.range(0)), DivisorRule::webster()};
  for (auto _ : state) benchmark::DoNotOptimize(apportion(e));
}
BENCHMARK(BM_Apportion)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
