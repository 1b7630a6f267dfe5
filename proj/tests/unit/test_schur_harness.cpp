#include <cmath>

#include "doctest.h"
#include "majorkit/errors.hpp"
#include "majorkit/majorization.hpp"
#include "majorkit/schur_harness.hpp"

using namespace majorkit;

TEST_SUITE("schur_harness") {
  TEST_CASE("separable examples") {
    CHECK(separable([](double t) { return t; })(RealVec({1, 2, 3})) == 6.0);
    CHECK(separable([](double t) { return t * t; })(RealVec({1, 2})) == 5.0);
    CHECK(separable(xlogx)(RealVec({1, 0})) == 0.0);
    CHECK(xlogx(0.0) == 0.0);
  }

  TEST_CASE("sampled pairs are comparable and respect their domain") {
    const std::vector<Constraint> domains{constraint::None{}, constraint::Nonnegative{}, constraint::Probability{},
                                          constraint::IntegerComposition{12}};
    for (const auto& c : domains) {
      for (std::size_t n = 2; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
          const ComparablePair pair = sample_comparable_pair(n, seed, c);
          REQUIRE(pair.upper.size() == n);
          CHECK(majorizes(pair.upper, pair.lower));
          if (!std::holds_alternative<constraint::None>(c)) {
            for (double v : pair.upper) CHECK(v >= 0.0);
            for (double v : pair.lower) CHECK(v >= 0.0);
          }
          if (std::holds_alternative<constraint::Probability>(c)) {
            CHECK_NOTHROW(ProbVec(pair.upper.vector()));
            CHECK_NOTHROW(ProbVec(pair.lower.vector()));
          }
          if (std::holds_alternative<constraint::IntegerComposition>(c)) {
            CHECK(pair.upper.sum() == 12.0);
            CHECK(pair.lower.sum() == 12.0);
            for (double v : pair.upper) CHECK(v == std::floor(v));
            for (double v : pair.lower) CHECK(v == std::floor(v));
          }
        }
      }
    }
  }

  TEST_CASE("sampling errors and determinism") {
    CHECK_THROWS_AS((void)sample_comparable_pair(3, 1, constraint::IntegerComposition{-1}), InvalidArgument);
    CHECK_THROWS_AS((void)sample_comparable_pair(1, 1, constraint::None{}), InvalidArgument);
    const auto a = sample_comparable_pair(5, 42, constraint::Probability{});
    const auto b = sample_comparable_pair(5, 42, constraint::Probability{});
    CHECK(a.upper == b.upper);
    CHECK(a.lower == b.lower);
  }

  TEST_CASE("property: separable convex functions are Schur convex") {
    for (const auto& h : std::vector<std::function<double(double)>>{
             [](double t) { return t * t; }, [](double t) { return std::abs(t); }, [](double t) { return std::exp(t); }}) {
      for (std::size_t n : {2, 3, 5, 8}) {
        const SchurReport r = check_schur(separable(h), n, Sense::convex, 500, constraint::None{});
        CHECK(r.trials == 500);
        CHECK(r.consistent());
        CHECK(r.violations.empty());
      }
    }
    CHECK(check_schur(separable(xlogx), 4, Sense::convex, 500, constraint::Probability{}).consistent());
  }

  TEST_CASE("property: a non-Schur-convex function is caught") {
    // x_0 alone is not symmetric, so spreading can lower it.
    const VectorFunction first = [](const RealVec& x) { return x[0]; };
    const SchurReport r = check_schur(first, 4, Sense::convex, 400, constraint::None{});
    CHECK_FALSE(r.consistent());
    CHECK(r.verdict == Verdict::violated);
    for (const auto& v : r.violations) CHECK(v.g_upper < v.g_lower - v.slack);
    // Schur concave functions fail the convex check.
    const SchurReport entropy = check_schur(separable([](double t) { return -xlogx(t); }), 4, Sense::convex,
                                            200, constraint::Probability{});
    CHECK_FALSE(entropy.consistent());
  }

  TEST_CASE("property: concave sense on g equals convex sense on -g") {
    const VectorFunction g = [](const RealVec& x) { return std::sin(x[0]) + x[1] * x[1] - x[2]; };
    const VectorFunction neg = [&](const RealVec& x) { return -g(x); };
    const SchurReport a = check_schur(g, 3, Sense::concave, 300, constraint::None{}, 1e-9, 9);
    const SchurReport b = check_schur(neg, 3, Sense::convex, 300, constraint::None{}, 1e-9, 9);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
      CHECK(a.violations[i].pair.upper == b.violations[i].pair.upper);
      CHECK(a.violations[i].pair.lower == b.violations[i].pair.lower);
    }
    CHECK_FALSE(a.violations.empty());
  }

  TEST_CASE("property: reports are deterministic in the seed") {
    const VectorFunction first = [](const RealVec& x) { return x[0]; };
    const auto a = check_schur(first, 5, Sense::convex, 200, constraint::Nonnegative{}, 1e-9, 77);
    const auto b = check_schur(first, 5, Sense::convex, 200, constraint::Nonnegative{}, 1e-9, 77);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) CHECK(a.violations[i].g_upper == b.violations[i].g_upper);
  }

  TEST_CASE("non-finite function values are input errors") {
    const VectorFunction bad = [](const RealVec&) { return std::nan(""); };
    CHECK_THROWS_AS((void)check_schur(bad, 3, Sense::convex, 5, constraint::None{}), InvalidArgument);
  }
}
