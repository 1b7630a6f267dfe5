#include <cmath>

#include "doctest.h"
#include "majorkit/catchability.hpp"
#include "majorkit/errors.hpp"
#include "oracles.hpp"

using namespace majorkit;

TEST_SUITE("catchability") {
  TEST_CASE("stirling examples and boundary values") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    for (unsigned n = 0; n <= 50; ++n) CHECK(stirling2(n, n) == 1);
    for (unsigned n = 1; n <= 50; ++n) CHECK(stirling2(n, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
    CHECK_THROWS_AS((void)stirling2(3, 4), InvalidArgument);
    CHECK_THROWS_AS((void)stirling2(kStirlingMax + 2, 1), InvalidArgument);
    // Exactness well past 64 bits: S(100, 2) = 2^99 - 1.
    CHECK(stirling2(100, 2) == (BigInt(1) << 99) - 1);
  }

  TEST_CASE("property: set-partition enumeration and Bell numbers") {
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned r = 0; r <= n; ++r) CHECK(stirling2(n, r) == oracle::set_partitions(n, r));
    const std::vector<std::uint64_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (unsigned n = 0; n <= 10; ++n) {
      BigInt sum = 0;
      for (unsigned r = 0; r <= n; ++r) sum += stirling2(n, r);
      CHECK(sum == bell[n]);
    }
    for (unsigned m = 2; m <= 60; ++m) CHECK(stirling2(m, m - 1) == BigInt(m) * (m - 1) / 2);
  }

  TEST_CASE("estimator examples") {
    CHECK(nu_hat(3, 2) == 7.0 / 3.0);
    CHECK(nu_hat(2, 2) == 3.0);
    CHECK(nu_hat(5, 1) == 1.0);
    CHECK_THROWS_AS((void)nu_hat(3, 4), InvalidArgument);
    CHECK_THROWS_AS((void)nu_hat(3, 0), InvalidArgument);
    CHECK(std::isfinite(nu_hat(199, 100)));
  }

  TEST_CASE("property: estimator is nondecreasing in r") {
    for (unsigned n = 1; n <= 30; ++n)
      for (unsigned r = 2; r <= n; ++r) CHECK(nu_hat(n, r) >= nu_hat(n, r - 1));
  }

  TEST_CASE("trap simulation examples") {
    const TrapResult one = trap_simulation(ProbVec({1, 0, 0}), 6, 2000, 1);
    CHECK(one.distinct_distribution[1] == 1.0);
    CHECK(one.nu_hat_mean.value == 1.0);
    CHECK(one.nu_hat_mean.standard_error == 0.0);
    CHECK(one.distinct_mean.value == 1.0);

    const TrapResult two = trap_simulation(ProbVec::uniform(2), 2, 200000, 2);
    const double se = std::sqrt(0.25 / 200000);
    CHECK(std::abs(two.distinct_distribution[2] - 0.5) <= 4 * se);

    const TrapResult a = trap_simulation(ProbVec({0.2, 0.8}), 5, 3000, 3);
    const TrapResult b = trap_simulation(ProbVec({0.2, 0.8}), 5, 3000, 3);
    CHECK(a.distinct_distribution == b.distinct_distribution);
    double total = 0.0;
    for (double v : a.distinct_distribution) total += v;
    CHECK(total == doctest::Approx(1.0));
  }

  TEST_CASE("property: uniform catchability is unbiased") {
    for (unsigned species : {2u, 3u, 5u}) {
      for (unsigned captures : {species, 2 * species, 10u}) {
        if (captures < species) continue;
        const TrapResult t = trap_simulation(ProbVec::uniform(species), captures, 100000, species * 100 + captures);
        CHECK(std::abs(t.nu_hat_mean.value - species) <= 4 * t.nu_hat_mean.standard_error);
      }
    }
  }

  TEST_CASE("bias experiment") {
    const CatchabilityReport r = schur_bias_experiment(3, 10, 10, 20000, 5);
    CHECK(r.lower_tail.consistent());
    CHECK(r.bias.consistent());
    CHECK_THROWS_AS((void)schur_bias_experiment(5, 3, 2, 100, 1), InvalidArgument);
  }
}
