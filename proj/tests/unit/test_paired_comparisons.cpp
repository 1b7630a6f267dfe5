#include <algorithm>
#include <cmath>
#include <utility>

#include "doctest.h"
#include "majorkit/errors.hpp"
#include "majorkit/majorization.hpp"
#include "majorkit/paired_comparisons.hpp"

using namespace majorkit;

namespace {

// Builds a k x k matrix from the upper-triangle entries p_ij, i < j.
PairwiseMatrix from_upper(std::size_t k, const std::vector<double>& upper) {
  std::vector<double> flat(k * k, 0.5);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      flat[i * k + j] = upper[idx];
      flat[j * k + i] = 1.0 - upper[idx];
      ++idx;
    }
  return PairwiseMatrix(k, flat);
}

PairwiseMatrix all_half(std::size_t k) { return PairwiseMatrix(k, std::vector<double>(k * k, 0.5)); }

// Ascending partial sums compared directly, without the library predicate.
bool partial_sum_majorizes(std::vector<double> x, std::vector<double> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    if (i + 1 < x.size() && sx > sy + 1e-12) return false;
  }
  return std::abs(sx - sy) <= 1e-9;
}

}  // namespace

TEST_SUITE("paired_comparisons") {
  TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(PairwiseMatrix(1, {0.5}), InvalidArgument);
    CHECK_THROWS_AS(PairwiseMatrix(2, {0.5, 0.6, 0.6, 0.5}), InvalidArgument);
    CHECK_THROWS_AS(PairwiseMatrix(2, {0.5, 1.2, -0.2, 0.5}), InvalidArgument);
    CHECK_THROWS_AS(PairwiseMatrix(2, {0.5, 0.5, 0.5}), InvalidArgument);
    CHECK_NOTHROW(PairwiseMatrix(2, {7.0, 0.3, 0.7, -3.0}));  // diagonal ignored
  }

  TEST_CASE("row strengths examples") {
    CHECK(row_strengths(from_upper(2, {0.5})) == RealVec({0.5, 0.5}));
    CHECK(row_strengths(all_half(3)) == RealVec({1, 1, 1}));
    CHECK(row_strengths(from_upper(3, {1, 1, 1})) == RealVec({2, 1, 0}));
  }

  TEST_CASE("transitivity examples") {
    CHECK(is_weakly_transitive(all_half(4)));
    CHECK(is_strongly_transitive(all_half(4)));
    // Rock-paper-scissors: p12 = p23 = p31 = 0.6, so p13 = 0.4.
    const PairwiseMatrix rps = from_upper(3, {0.6, 0.4, 0.6});
    CHECK_FALSE(is_weakly_transitive(rps));
    CHECK(is_weakly_transitive(from_upper(3, {0.9, 0.9, 0.9})));
    CHECK_FALSE(is_strongly_transitive(from_upper(3, {0.6, 0.65, 0.7})));
    CHECK(is_strongly_transitive(from_upper(3, {0.6, 0.7, 0.7})));
    CHECK(is_weakly_transitive(from_upper(3, {0.6, 0.65, 0.7})));
  }

  TEST_CASE("matrix majorization examples") {
    const PairwiseMatrix p = from_upper(3, {0.6, 0.7, 0.8});
    CHECK(matrix_majorizes(p, p));
    CHECK(matrix_majorizes(from_upper(2, {1.0}), from_upper(2, {0.5})));
    CHECK_FALSE(matrix_majorizes(from_upper(2, {0.5}), from_upper(2, {1.0})));
    CHECK_THROWS_AS((void)matrix_majorizes(all_half(3), all_half(4)), InvalidArgument);
  }

  TEST_CASE("property: matrix majorization matches a partial-sum oracle") {
    Engine engine(8);
    for (int t = 0; t < 300; ++t) {
      const PairwiseMatrix a = random_pairwise(3, engine);
      PairwiseMatrix b = a;
      if (t % 2) b = random_pairwise(3, engine);
      else {
        double margin = 1.0;
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}})
          margin = std::min({margin, a(i, j), 1.0 - a(i, j)});
        apply_three_cycle(b, 0, 1, 2, margin * (2.0 * uniform01(engine) - 1.0));
      }
      CHECK(matrix_majorizes(a, b) == partial_sum_majorizes(a.flattened().vector(), b.flattened().vector()));
    }
  }

  TEST_CASE("3-cycles preserve strengths and complements") {
    PairwiseMatrix m = from_upper(4, {0.6, 0.7, 0.8, 0.55, 0.65, 0.75});
    const RealVec before = row_strengths(m);
    apply_three_cycle(m, 0, 2, 3, 0.04);
    apply_three_cycle(m, 3, 1, 0, -0.03);
    const RealVec after = row_strengths(m);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(after[i] - before[i]) <= 1e-12);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) CHECK(std::abs(m(i, j) + m(j, i) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(apply_three_cycle(m, 0, 0, 1, 0.01), InvalidArgument);
    CHECK_THROWS_AS(apply_three_cycle(m, 0, 1, 7, 0.01), InvalidArgument);
    CHECK_THROWS_AS(apply_three_cycle(m, 0, 1, 2, 0.9), InvalidArgument);
  }

  TEST_CASE("falsifier examples") {
    CHECK_FALSE(minimality_falsifier(from_upper(3, {0.6, 0.7, 0.7}), 10000, 0.05, 1).has_value());
    CHECK_FALSE(minimality_falsifier(all_half(4), 2000, 0.1, 2).has_value());
    // Rock-paper-scissors with unequal margins can be flattened by a 3-cycle.
    const PairwiseMatrix rps = from_upper(3, {0.9, 0.3, 0.6});
    const auto q = minimality_falsifier(rps, 10000, 0.1, 3);
    REQUIRE(q.has_value());
    CHECK(matrix_majorizes(rps, *q));
    CHECK_FALSE(matrix_majorizes(*q, rps));
    const RealVec a = row_strengths(rps), b = row_strengths(*q);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
    CHECK_THROWS_AS((void)minimality_falsifier(all_half(2), 10, 0.1, 1), InvalidArgument);
    CHECK_THROWS_AS((void)minimality_falsifier(all_half(3), 10, 0.5, 1), InvalidArgument);
    CHECK_THROWS_AS((void)minimality_falsifier(all_half(3), 10, 0.0, 1), InvalidArgument);
  }

  TEST_CASE("property: strong implies weak transitivity") {
    Engine engine(12);
    for (int t = 0; t < 500; ++t) {
      const std::size_t k = 3 + uniform_index(engine, 4);
      const PairwiseMatrix s = random_strongly_transitive(k, engine);
      CHECK(is_strongly_transitive(s));
      CHECK(is_weakly_transitive(s));
      const PairwiseMatrix r = random_pairwise(k, engine);
      if (is_strongly_transitive(r)) CHECK(is_weakly_transitive(r));
    }
  }

  TEST_CASE("property: strongly transitive matrices look minimal") {
    Engine engine(31);
    for (int t = 0; t < 20; ++t) {
      const PairwiseMatrix s = random_strongly_transitive(3 + static_cast<std::size_t>(t % 2), engine);
      CHECK_FALSE(minimality_falsifier(s, 2000, 0.05, derive_seed(7, t)).has_value());
    }
  }
}
