#include <cmath>
#include <limits>
#include <numeric>

#include "doctest.h"
#include "majorkit/apportionment.hpp"
#include "majorkit/errors.hpp"
#include "majorkit/majorization.hpp"
#include "majorkit/random.hpp"

using namespace majorkit;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<unsigned long> seats_of(std::vector<double> votes, unsigned long n, DivisorRule rule) {
  return apportion({std::move(votes), n, rule}).seats;
}

RealVec as_real(const std::vector<unsigned long>& s) {
  std::vector<double> v(s.begin(), s.end());
  return RealVec(v);
}

}  // namespace

TEST_SUITE("apportionment") {
  TEST_CASE("signpost examples") {
    CHECK(signpost(1.0, 3) == 3.5);
    CHECK(signpost(0.0, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(signpost(-1.0, 1) == doctest::Approx(4.0 / 3.0));
    for (unsigned long k = 0; k < 20; ++k) {
      CHECK(signpost(-kInf, k) == double(k));
      CHECK(signpost(kInf, k) == double(k + 1));
    }
    CHECK(signpost(0.0, 0) == 0.0);
    CHECK(signpost(-1.0, 0) == 0.0);
    CHECK(signpost(-3.0, 0) == 0.0);
    CHECK(signpost(0.5, 0) > 0.0);
  }

  TEST_CASE("property: signposts lie in [k, k+1] and increase in k and p") {
    const std::vector<double> ps{-kInf, -5.0, -1.0, -0.3, 0.0, 0.4, 1.0, 2.5, 9.0, kInf};
    for (unsigned long k = 0; k < 60; ++k) {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const double s = signpost(ps[i], k);
        CHECK(s >= double(k));
        CHECK(s <= double(k + 1));
        if (k > 0) CHECK(s > signpost(ps[i], k - 1));
        if (i > 0) CHECK(s >= signpost(ps[i - 1], k));
      }
    }
  }

  TEST_CASE("rule parsing") {
    CHECK(DivisorRule::parse("webster").p == 1.0);
    CHECK(DivisorRule::parse("adams").p == -kInf);
    CHECK(DivisorRule::parse("jefferson").p == kInf);
    CHECK(DivisorRule::parse("hill").p == 0.0);
    CHECK(DivisorRule::parse("dean").p == -1.0);
    CHECK(DivisorRule::parse("p=2.5").p == 2.5);
    CHECK(DivisorRule::parse("p=-inf").p == -kInf);
    CHECK_THROWS_AS((void)DivisorRule::parse("hamilton"), InvalidArgument);
    CHECK_THROWS_AS((void)DivisorRule::parse("p=abc"), InvalidArgument);
    CHECK(DivisorRule::webster().zero_first_signpost() == false);
    CHECK(DivisorRule::hill().zero_first_signpost());
  }

  TEST_CASE("allocation examples") {
    CHECK(seats_of({0.5, 0.3, 0.2}, 10, DivisorRule::webster()) == std::vector<unsigned long>{5, 3, 2});
    CHECK(seats_of({0.7, 0.2, 0.1}, 5, DivisorRule::adams()) == std::vector<unsigned long>{3, 1, 1});
    CHECK(seats_of({0.7, 0.2, 0.1}, 5, DivisorRule::jefferson()) == std::vector<unsigned long>{4, 1, 0});
    CHECK(seats_of({0.7, 0.2, 0.1}, 0, DivisorRule::webster()) == std::vector<unsigned long>{0, 0, 0});
    CHECK(majorizes(as_real({4, 1, 0}), as_real({3, 1, 1})));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS((void)apportion({{0.5, 0.0, 0.5}, 3, DivisorRule::webster()}), InvalidArgument);
    CHECK_THROWS_AS((void)apportion({{}, 3, DivisorRule::webster()}), InvalidArgument);
    CHECK_THROWS_AS((void)apportion({{0.4, 0.3, 0.3}, 2, DivisorRule::adams()}), InvalidArgument);
    CHECK_THROWS_AS((void)apportion({{0.4, 0.3, 0.3}, 2, DivisorRule::hill()}), InvalidArgument);
    CHECK_NOTHROW((void)apportion({{0.4, 0.3, 0.3}, 2, DivisorRule::webster()}));
  }

  TEST_CASE("ties are broken deterministically and reported") {
    const Apportionment even = apportion({{1.0, 1.0, 1.0}, 4, DivisorRule::webster()});
    CHECK(even.seats == std::vector<unsigned long>{2, 1, 1});
    CHECK(even.tie_affected());
    CHECK_FALSE(even.ties.empty());
    const Apportionment three = apportion({{1.0, 1.0, 1.0}, 3, DivisorRule::webster()});
    CHECK(three.seats == std::vector<unsigned long>{1, 1, 1});
    CHECK_FALSE(three.tie_affected());
    const Apportionment clean = apportion({{0.5, 0.3, 0.2}, 10, DivisorRule::webster()});
    CHECK(clean.trace.size() == 10);
  }

  TEST_CASE("property: house monotonicity and seat totals") {
    Engine engine(77);
    const std::vector<DivisorRule> rules{DivisorRule::adams(), DivisorRule::dean(), DivisorRule::hill(),
                                         DivisorRule::webster(), DivisorRule::jefferson()};
    for (int t = 0; t < 100; ++t) {
      const std::size_t parties = 2 + uniform_index(engine, 7);
      std::vector<double> votes(parties);
      for (double& v : votes) v = 1.0 + std::floor(uniform01(engine) * 10000.0);
      for (const DivisorRule& rule : rules) {
        std::vector<unsigned long> prev;
        for (unsigned long n = parties; n <= parties + 30; ++n) {
          const auto s = seats_of(votes, n, rule);
          CHECK(std::accumulate(s.begin(), s.end(), 0UL) == n);
          if (!prev.empty())
            for (std::size_t i = 0; i < parties; ++i) CHECK(s[i] >= prev[i]);
          prev = s;
        }
      }
    }
  }

  TEST_CASE("property: the rule chain holds on random elections") {
    Engine engine(5);
    std::size_t checked = 0;
    for (int t = 0; t < 300; ++t) {
      const std::size_t parties = 2 + uniform_index(engine, 7);
      std::vector<double> votes(parties);
      for (double& v : votes) v = 1.0 + std::floor(uniform01(engine) * 100000.0);
      const unsigned long seats = parties + uniform_index(engine, 100 - parties + 1);
      const ChainReport r = rule_chain_check(votes, seats);
      CHECK(r.entries.size() == 5);
      CHECK(r.holds());
      if (!r.tie_affected) {
        CHECK(r.comparisons == 10);  // every pair of the five rules
        ++checked;
      }
    }
    CHECK(checked > 200);
    const ChainReport ex = rule_chain_check({0.7, 0.2, 0.1}, 5);
    CHECK(ex.holds());
    CHECK(ex.entries.front().result.seats == std::vector<unsigned long>{3, 1, 1});
    CHECK(ex.entries.back().result.seats == std::vector<unsigned long>{4, 1, 0});
  }
}
