#include "majorkit/paired_comparisons.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "majorkit/errors.hpp"
#include "majorkit/majorization.hpp"

namespace majorkit {

PairwiseMatrix::PairwiseMatrix(std::size_t k, std::vector<double> row_major)
    : k_(k), p_(std::move(row_major)) {
  if (k_ < 2) throw InvalidArgument("PairwiseMatrix: need at least 2 teams");
  if (p_.size() != k_ * k_) throw InvalidArgument("PairwiseMatrix: expected k*k entries");
  for (std::size_t i = 0; i < k_; ++i) {
    p_[i * k_ + i] = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t j = 0; j < k_; ++j) {
      if (i == j) continue;
      const double v = p_[i * k_ + j];
      if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw InvalidArgument("PairwiseMatrix: p(" + std::to_string(i) + "," + std::to_string(j) +
                              ") must lie in [0, 1]");
      if (j > i && std::abs(v + p_[j * k_ + i] - 1.0) > kComplementTolerance)
        throw InvalidArgument("PairwiseMatrix: p(" + std::to_string(i) + "," + std::to_string(j) +
                              ") + p(" + std::to_string(j) + "," + std::to_string(i) + ") != 1");
    }
  }
}

double PairwiseMatrix::operator()(std::size_t i, std::size_t j) const { return p_[i * k_ + j]; }

void PairwiseMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i == j || i >= k_ || j >= k_) throw InvalidArgument("PairwiseMatrix::set: bad indices");
  if (!(value >= 0.0 && value <= 1.0)) throw InvalidArgument("PairwiseMatrix::set: value outside [0, 1]");
  p_[i * k_ + j] = value;
  p_[j * k_ + i] = 1.0 - value;
}

RealVec PairwiseMatrix::flattened() const {
  std::vector<double> out;
  out.reserve(k_ * (k_ - 1));
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j)
      if (i != j) out.push_back(p_[i * k_ + j]);
  return RealVec(std::move(out));
}

RealVec row_strengths(const PairwiseMatrix& m) {
  std::vector<double> out(m.teams(), 0.0);
  for (std::size_t i = 0; i < m.teams(); ++i)
    for (std::size_t j = 0; j < m.teams(); ++j)
      if (i != j) out[i] += m(i, j);
  return RealVec(std::move(out));
}

namespace {

template <class Conclusion>
bool holds_for_all_triples(const PairwiseMatrix& m, Conclusion&& conclusion) {
  const std::size_t k = m.teams();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || m(i, j) < 0.5 - kTransitivitySlack) continue;
      for (std::size_t l = 0; l < k; ++l) {
        if (l == i || l == j || m(j, l) < 0.5 - kTransitivitySlack) continue;
        if (!conclusion(m(i, j), m(j, l), m(i, l))) return false;
      }
    }
  return true;
}

}  // namespace

bool is_weakly_transitive(const PairwiseMatrix& m) {
  return holds_for_all_triples(m, [](double, double, double pil) { return pil >= 0.5 - kTransitivitySlack; });
}

bool is_strongly_transitive(const PairwiseMatrix& m) {
  return holds_for_all_triples(m, [](double pij, double pjl, double pil) {
    return pil >= std::max(pij, pjl) - kTransitivitySlack;
  });
}

bool matrix_majorizes(const PairwiseMatrix& p, const PairwiseMatrix& q) {
  if (p.teams() != q.teams()) throw InvalidArgument("matrix_majorizes: team counts differ");
  return majorizes(p.flattened(), q.flattened());
}

void apply_three_cycle(PairwiseMatrix& m, std::size_t i, std::size_t j, std::size_t l, double delta) {
  if (i == j || j == l || l == i) throw InvalidArgument("apply_three_cycle: indices must be distinct");
  auto shifted = [&](std::size_t a, std::size_t b) {
    const double v = m(a, b) + delta;
    if (v < -1e-15 || v > 1.0 + 1e-15) throw InvalidArgument("apply_three_cycle: delta leaves [0, 1]");
    return std::clamp(v, 0.0, 1.0);
  };
  const double ij = shifted(i, j);
  const double jl = shifted(j, l);
  const double li = shifted(l, i);
  m.set(i, j, ij);
  m.set(j, l, jl);
  m.set(l, i, li);
}

std::optional<PairwiseMatrix> minimality_falsifier(const PairwiseMatrix& p, std::size_t trials,
                                                   double step, std::uint64_t seed) {
  const std::size_t k = p.teams();
  if (k < 3) throw InvalidArgument("minimality_falsifier: need k >= 3 (no 3-cycle exists for k = 2)");
  if (!(step > 0.0 && step < 0.5)) throw InvalidArgument("minimality_falsifier: step must lie in (0, 0.5)");

  const RealVec target = p.flattened();
  for (std::size_t t = 0; t < trials; ++t) {
    Engine engine = make_engine(seed, t);
    PairwiseMatrix q = p;
    const int moves = 1 + static_cast<int>(uniform_index(engine, 3));
    for (int mv = 0; mv < moves; ++mv) {
      const std::size_t i = uniform_index(engine, k);
      std::size_t j = uniform_index(engine, k - 1);
      if (j >= i) ++j;
      std::size_t l = uniform_index(engine, k - 2);
      for (std::size_t skip : {std::min(i, j), std::max(i, j)})
        if (l >= skip) ++l;
      // Feasible range keeps the three raised entries (and their transposes) in [0, 1].
      const double up = std::min({1.0 - q(i, j), 1.0 - q(j, l), 1.0 - q(l, i)});
      const double down = std::min({q(i, j), q(j, l), q(l, i)});
      const double delta = std::clamp((2.0 * uniform01(engine) - 1.0) * step, -down, up);
      if (delta == 0.0) continue;
      apply_three_cycle(q, i, j, l, delta);
    }
    const RealVec candidate = q.flattened();
    if (majorizes(target, candidate) && !majorizes(candidate, target)) return q;
  }
  return std::nullopt;
}

PairwiseMatrix random_strongly_transitive(std::size_t k, Engine& engine) {
  if (k < 2) throw InvalidArgument("random_strongly_transitive: need k >= 2");
  std::vector<std::size_t> rank_to_team(k);
  std::iota(rank_to_team.begin(), rank_to_team.end(), std::size_t{0});
  for (std::size_t i = k - 1; i > 0; --i) std::swap(rank_to_team[i], rank_to_team[uniform_index(engine, i + 1)]);

  while (true) {
    // margin[a][c] for ranks a < c, filled by increasing rank gap so that
    // margin(a, c) >= max(margin(a, b), margin(b, c)) for a < b < c.
    std::vector<double> margin(k * k, 0.0);
    for (std::size_t gap = 1; gap < k; ++gap)
      for (std::size_t a = 0; a + gap < k; ++a) {
        const std::size_t c = a + gap;
        double v = 0.5 * (1.0 - uniform01(engine)) * (gap == 1 ? 1.0 : uniform01(engine));
        for (std::size_t b = a + 1; b < c; ++b) v = std::max({v, margin[a * k + b], margin[b * k + c]});
        margin[a * k + c] = v;
      }
    std::vector<double> values(k * k, 0.5);
    PairwiseMatrix m(k, values);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t c = a + 1; c < k; ++c) m.set(rank_to_team[a], rank_to_team[c], 0.5 + margin[a * k + c]);
    if (is_strongly_transitive(m)) return m;
  }
}

PairwiseMatrix random_pairwise(std::size_t k, Engine& engine) {
  PairwiseMatrix m(k, std::vector<double>(k * k, 0.5));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) m.set(i, j, uniform01(engine));
  return m;
}

}  // namespace majorkit
