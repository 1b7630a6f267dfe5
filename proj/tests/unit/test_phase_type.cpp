#include <cmath>

#include "doctest.h"
#include "majorkit/errors.hpp"
#include "majorkit/phase_type.hpp"

using namespace majorkit;

TEST_SUITE("phase_type") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PHParams(ProbVec({1.0}), SquareMatrix({{1.0}})), InvalidArgument);
    CHECK_THROWS_AS(PHParams(ProbVec({1.0, 0.0}), SquareMatrix({{-1.0, -0.5}, {0.0, -1.0}})), InvalidArgument);
    // Row sum positive: more outflow to transient states than the diagonal allows.
    CHECK_THROWS_AS(PHParams(ProbVec({1.0, 0.0}), SquareMatrix({{-1.0, 2.0}, {0.0, -1.0}})), InvalidArgument);
    // Closed class with no absorption: singular.
    CHECK_THROWS_AS(PHParams(ProbVec({1.0, 0.0}), SquareMatrix({{-1.0, 1.0}, {1.0, -1.0}})), InvalidArgument);
    CHECK_THROWS_AS(PHParams(ProbVec({1.0}), SquareMatrix({{-1.0, 0.0}, {0.0, -1.0}})), InvalidArgument);
  }

  TEST_CASE("erlang examples") {
    const PHParams e1 = erlang(1, 2.0);
    CHECK(e1.order() == 1);
    CHECK(e1.q()(0, 0) == -2.0);
    CHECK(e1.absorption_rate(0) == 2.0);
    const Moments m1 = moments(erlang(1, 2.0));
    CHECK(m1.mean == doctest::Approx(0.5));
    CHECK(m1.second == doctest::Approx(0.5));
    const Moments m3 = moments(erlang(3, 1.0));
    CHECK(m3.mean == doctest::Approx(3.0));
    CHECK(m3.second - m3.mean * m3.mean == doctest::Approx(3.0));
    for (std::size_t n = 1; n <= 8; ++n) {
      for (double rate : {0.5, 1.0, 3.0}) {
        CHECK(std::abs(moments(erlang(n, rate)).mean - n / rate) <= 1e-12 * n / rate);
        CHECK(std::abs(coefficient_of_variation(erlang(n, rate)) - 1.0 / std::sqrt(double(n))) <= 1e-12);
      }
    }
    CHECK_THROWS_AS((void)erlang(0, 1.0), InvalidArgument);
    CHECK_THROWS_AS((void)erlang(2, 0.0), InvalidArgument);
  }

  TEST_CASE("hyperexponential moments") {
    const std::vector<double> rates{1.0, 4.0};
    const PHParams h = hyperexponential(ProbVec({0.3, 0.7}), rates);
    const Moments m = moments(h);
    CHECK(m.mean == doctest::Approx(0.3 / 1.0 + 0.7 / 4.0));
    CHECK(m.second == doctest::Approx(0.3 * 2.0 + 0.7 * 2.0 / 16.0));
    CHECK(coefficient_of_variation(h) > 1.0);
  }

  TEST_CASE("simulation examples") {
    const Sample s1 = sample_absorption(erlang(1, 1.0), 1'000'000, 1);
    RunningStats a;
    for (double v : s1.values()) a.push(v);
    CHECK(std::abs(a.mean() - 1.0) <= 4 * a.standard_error());
    const Sample s3 = sample_absorption(erlang(3, 1.0), 1'000'000, 2);
    RunningStats b;
    for (double v : s3.values()) b.push(v);
    CHECK(std::abs(b.mean() - 3.0) <= 4 * b.standard_error());
    CHECK(sample_absorption(erlang(2, 1.0), 5000, 3).values() == sample_absorption(erlang(2, 1.0), 5000, 3).values());
  }

  TEST_CASE("property: exact moments agree with simulation") {
    Engine engine(41);
    for (int t = 0; t < 5; ++t) {
      const PHParams p = random_phase_type(2 + static_cast<std::size_t>(t % 3), engine);
      const Moments m = moments(p);
      RunningStats s;
      const Sample sample = sample_absorption(p, 1'000'000, derive_seed(1, t));
      for (double v : sample.values()) s.push(v);
      CHECK(std::abs(s.mean() - m.mean) <= 4 * s.standard_error());
    }
  }

  TEST_CASE("property: the Erlang cv is the smallest of its order") {
    Engine engine(2024);
    for (std::size_t n = 2; n <= 5; ++n) {
      for (int t = 0; t < 100; ++t) {
        const PHParams p = random_phase_type(n, engine);
        CHECK(coefficient_of_variation(p) >= 1.0 / std::sqrt(double(n)) - 1e-9);
        for (std::size_t i = 0; i < n; ++i) CHECK(p.absorption_rate(i) >= 0.05 * -p.q()(i, i) - 1e-12);
      }
    }
  }

  TEST_CASE("lorenz comparison with the Erlang reference") {
    const auto same = lorenz_vs_erlang(erlang(3, 2.5), 200000, 4);
    CHECK(same.erlang_dominates);
    CHECK(same.max_excess <= same.tolerance);
    CHECK(same.tolerance == doctest::Approx(3.0 / std::sqrt(200000.0)));
    const std::vector<double> rates{0.5, 5.0};
    const auto hyper = lorenz_vs_erlang(hyperexponential(ProbVec({0.5, 0.5}), rates), 200000, 5);
    CHECK(hyper.erlang_dominates);
    CHECK(hyper.relation == LorenzRelation::x_below_y);
  }

  TEST_CASE("property: lorenz verdict does not depend on the Erlang rate") {
    Engine engine(6);
    const PHParams p = random_phase_type(3, engine);
    const auto a = lorenz_vs_erlang(p, 100000, 8, 1.0);
    const auto b = lorenz_vs_erlang(p, 100000, 8, 7.0);
    CHECK(a.erlang_dominates == b.erlang_dominates);
    CHECK(a.max_excess == doctest::Approx(b.max_excess).epsilon(1e-9));
  }
}
