#include <cmath>

#include "doctest.h"
#include "majorkit/errors.hpp"
#include "majorkit/pattern_waiting.hpp"
#include "majorkit/schur_harness.hpp"
#include "oracles.hpp"

using namespace majorkit;

TEST_SUITE("pattern_waiting") {
  TEST_CASE("suffix transitions") {
    CHECK(next_suffix({0}, 1) == SuffixState{0, 1});
    CHECK(next_suffix({0}, 0) == SuffixState{0});
    CHECK(next_suffix({0, 1}, 0) == SuffixState{1, 0});
    CHECK(next_suffix({2, 0, 1}, 0) == SuffixState{1, 0});
    CHECK(next_suffix({}, 2) == SuffixState{2});
  }

  TEST_CASE("chain size and limits") {
    // Transient states are ordered distinct suffixes of length < k.
    const SuffixChain c3 = build_chain(ProbVec::uniform(3));
    CHECK(c3.transient_count() == 1 + 3 + 6);
    CHECK_THROWS_AS((void)build_chain(ProbVec::uniform(8)), SizeError);
  }

  TEST_CASE("expected waiting examples") {
    CHECK(expected_waiting(ProbVec({1.0})) == doctest::Approx(1.0));
    CHECK(std::abs(expected_waiting(ProbVec({0.5, 0.5})) - 3.0) <= 1e-9);
    CHECK(expected_waiting(ProbVec({0.9, 0.1})) > 3.0);
    for (double a : {0.1, 0.3, 0.5, 0.77})
      CHECK(expected_waiting(ProbVec({a, 1 - a})) == doctest::Approx(oracle::waiting_two_symbols(a)).epsilon(1e-10));
    CHECK_THROWS_AS((void)expected_waiting(ProbVec({1.0, 0.0})), NumericError);
  }

  TEST_CASE("tail examples") {
    CHECK(tail_probability(ProbVec({0.3, 0.7}), 0) == 1.0);
    CHECK(tail_probability(ProbVec({0.5, 0.5}), 2) == doctest::Approx(0.5));
    CHECK(tail_probability(ProbVec({1.0, 0.0}), 7) == doctest::Approx(1.0));
    const ProbVec p({0.2, 0.3, 0.5});
    CHECK(tail_probability(p, 2) == doctest::Approx(1.0));
  }

  TEST_CASE("property: tails match brute-force enumeration") {
    for (const auto& p : std::vector<std::vector<double>>{{0.5, 0.5}, {0.2, 0.3, 0.5}, {1.0 / 3, 1.0 / 3, 1.0 / 3},
                                                          {0.1, 0.2, 0.3, 0.4}}) {
      const SuffixChain chain = build_chain(ProbVec(p));
      const std::size_t max_n = p.size() == 4 ? 7 : 9;
      const auto tails = tail_probabilities(chain, max_n);
      for (std::size_t n = 0; n <= max_n; ++n) CHECK(tails[n] == doctest::Approx(oracle::tail_brute(p, n)).epsilon(1e-12));
    }
  }

  TEST_CASE("property: expectation equals the summed tail") {
    const ProbVec p({0.25, 0.35, 0.4});
    const auto tails = tail_probabilities(build_chain(p), 4000);
    double sum = 0.0;
    for (double t : tails) sum += t;
    CHECK(sum == doctest::Approx(expected_waiting(p)).epsilon(1e-9));
    for (std::size_t n = 1; n < tails.size(); ++n) CHECK(tails[n] <= tails[n - 1] + 1e-15);
  }

  TEST_CASE("monte carlo examples") {
    const Estimate one = waiting_monte_carlo(ProbVec({1.0}), 1000, 1);
    CHECK(one.value == 1.0);
    CHECK(one.standard_error == 0.0);
    const Estimate two = waiting_monte_carlo(ProbVec({0.5, 0.5}), 1'000'000, 2);
    CHECK(std::abs(two.value - 3.0) <= 4 * two.standard_error);
    CHECK(waiting_monte_carlo(ProbVec({0.3, 0.7}), 5000, 9).value ==
          waiting_monte_carlo(ProbVec({0.3, 0.7}), 5000, 9).value);
    CHECK_THROWS_AS((void)waiting_monte_carlo(ProbVec({1.0, 0.0}), 10, 1), InvalidArgument);
    CHECK_THROWS_AS((void)waiting_monte_carlo(ProbVec({0.5, 0.5}), 0, 1), InvalidArgument);
  }

  TEST_CASE("property: monte carlo agrees with the exact chain") {
    for (const auto& p : std::vector<std::vector<double>>{
             {0.3, 0.7}, {0.2, 0.3, 0.5}, {0.6, 0.2, 0.2}, {0.25, 0.25, 0.25, 0.25}, {0.1, 0.2, 0.3, 0.4}}) {
      const Estimate e = waiting_monte_carlo(ProbVec(p), 200000, 11);
      CHECK(std::abs(e.value - expected_waiting(ProbVec(p))) <= 4 * e.standard_error);
    }
  }

  TEST_CASE("property: Schur convexity of E(N) and of the tails") {
    for (std::size_t k : {3u, 4u}) {
      const double uniform = expected_waiting(ProbVec::uniform(k));
      for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const ComparablePair pair = sample_comparable_pair(k, derive_seed(seed, k), constraint::Probability{});
        if (*std::min_element(pair.upper.begin(), pair.upper.end()) < 1e-3) continue;
        const ProbVec up(pair.upper.vector()), lo(pair.lower.vector());
        const SuffixChain cu = build_chain(up), cl = build_chain(lo);
        CHECK(expected_waiting(cu) >= expected_waiting(cl) - 1e-9);
        CHECK(expected_waiting(lo) >= uniform - 1e-9);
        const auto tu = tail_probabilities(cu, 4 * k), tl = tail_probabilities(cl, 4 * k);
        for (std::size_t n : {k, 2 * k, 4 * k}) CHECK(tu[n] >= tl[n] - 1e-9);
      }
    }
  }

  TEST_CASE("seven symbols use the sparse path") {
    const double e = expected_waiting(ProbVec::uniform(7));
    const Estimate mc = waiting_monte_carlo(ProbVec::uniform(7), 20000, 3);
    CHECK(std::abs(e - mc.value) <= 4 * mc.standard_error);
  }
}
