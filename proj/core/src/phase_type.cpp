#include "majorkit/phase_type.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "majorkit/errors.hpp"

namespace majorkit {

namespace {

Eigen::MatrixXd to_eigen(const SquareMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return out;
}

}  // namespace

PHParams::PHParams(ProbVec alpha, SquareMatrix q) : alpha_(std::move(alpha)), q_(std::move(q)) {
  const std::size_t n = alpha_.size();
  if (q_.size() != n)
    throw InvalidArgument("PHParams: Q is " + std::to_string(q_.size()) + "x" + std::to_string(q_.size()) +
                          " but alpha has " + std::to_string(n) + " states");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(q_(i, i) < 0.0)) throw InvalidArgument("PHParams: q_" + std::to_string(i) + std::to_string(i) + " must be < 0");
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && q_(i, j) < 0.0)
        throw InvalidArgument("PHParams: off-diagonal q_" + std::to_string(i) + "," + std::to_string(j) + " is negative");
      row += q_(i, j);
    }
    if (row > 1e-12 * std::abs(q_(i, i)))
      throw InvalidArgument("PHParams: row " + std::to_string(i) + " of Q has a positive sum");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(q_));
  if (!lu.isInvertible()) throw InvalidArgument("PHParams: Q is singular (absorption is not certain)");
}

double PHParams::absorption_rate(std::size_t i) const {
  double row = 0.0;
  for (std::size_t j = 0; j < order(); ++j) row += q_(i, j);
  return std::max(0.0, -row);
}

PHParams erlang(std::size_t n, double rate) {
  if (n < 1) throw InvalidArgument("erlang: order must be >= 1");
  if (!(rate > 0.0)) throw InvalidArgument("erlang: rate must be > 0");
  std::vector<double> alpha(n, 0.0);
  alpha[0] = 1.0;
  SquareMatrix q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q(i, i) = -rate;
    if (i + 1 < n) q(i, i + 1) = rate;
  }
  return PHParams(ProbVec(std::move(alpha)), std::move(q));
}

PHParams hyperexponential(const ProbVec& weights, std::span<const double> rates) {
  if (rates.size() != weights.size()) throw InvalidArgument("hyperexponential: one rate per branch");
  SquareMatrix q(weights.size());
  for (std::size_t i = 0; i < rates.size(); ++i) q(i, i) = -rates[i];
  return PHParams(weights, std::move(q));
}

Moments moments(const PHParams& params) {
  const Eigen::MatrixXd q = to_eigen(params.q());
  const auto n = q.rows();
  Eigen::RowVectorXd alpha(n);
  for (Eigen::Index i = 0; i < n; ++i) alpha(i) = params.alpha()[static_cast<std::size_t>(i)];

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(q);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd first = lu.solve(ones);    // Q^{-1} 1
  first += lu.solve(ones - q * first);
  Eigen::VectorXd second = lu.solve(first);  // Q^{-2} 1
  second += lu.solve(first - q * second);

  Moments m{-alpha.dot(first), 2.0 * alpha.dot(second)};
  if (!std::isfinite(m.mean) || !std::isfinite(m.second))
    throw InvalidArgument("moments: Q is numerically singular");
  return m;
}

double coefficient_of_variation(const PHParams& params) {
  const Moments m = moments(params);
  if (!(m.mean > 0.0)) throw InvalidArgument("coefficient_of_variation: mean must be positive");
  const double variance = std::max(0.0, m.second - m.mean * m.mean);
  return std::sqrt(variance) / m.mean;
}

Sample sample_absorption(const PHParams& params, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("sample_absorption: trials must be >= 1");
  const std::size_t n = params.order();
  const DiscreteSampler start(params.alpha().values());
  // Outcome j < n jumps to state j, outcome n absorbs.
  std::vector<DiscreteSampler> jump;
  std::vector<double> leave_rate(n);
  jump.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> w(n + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) w[j] = params.q()(i, j);
    w[n] = params.absorption_rate(i);
    leave_rate[i] = -params.q()(i, i);
    jump.emplace_back(w);
  }

  const auto parts = run_chunked(trials, seed, [&](Engine& engine, std::size_t lo, std::size_t hi) {
    std::vector<double> out;
    out.reserve(hi - lo);
    for (std::size_t t = lo; t < hi; ++t) {
      std::size_t state = start(engine);
      double time = 0.0;
      for (std::size_t steps = 0;; ++steps) {
        if (steps >= kAbsorptionStepCap)
          throw CapExceeded("sample_absorption: exceeded " + std::to_string(kAbsorptionStepCap) +
                            " jumps in one trial");
        time += exponential(engine, leave_rate[state]);
        const std::size_t next = jump[state](engine);
        if (next == n) break;
        state = next;
      }
      out.push_back(time);
    }
    return out;
  });
  std::vector<double> values;
  values.reserve(trials);
  for (const auto& p : parts) values.insert(values.end(), p.begin(), p.end());
  return Sample(std::move(values));
}

ErlangLorenzVerdict lorenz_vs_erlang(const PHParams& params, std::size_t trials, std::uint64_t seed,
                                     double erlang_rate) {
  const Sample given = sample_absorption(params, trials, derive_seed(seed, 0));
  const Sample reference = sample_absorption(erlang(params.order(), erlang_rate), trials, derive_seed(seed, 1));
  const LorenzCurve lg = lorenz_curve(given);
  const LorenzCurve le = lorenz_curve(reference);

  ErlangLorenzVerdict v;
  v.tolerance = 3.0 / std::sqrt(static_cast<double>(trials));
  v.relation = lorenz_compare(le, lg, v.tolerance);
  v.erlang_dominates = v.relation == LorenzRelation::x_below_y || v.relation == LorenzRelation::equal;
  double excess = -1.0;
  for (std::size_t k = 0; k < lg.points().size(); ++k)
    excess = std::max(excess, lg.points()[k].income_share - le.points()[k].income_share);
  v.max_excess = excess;
  return v;
}

PHParams random_phase_type(std::size_t n, Engine& engine) {
  if (n < 1) throw InvalidArgument("random_phase_type: n must be >= 1");
  SquareMatrix q(n);
  const bool sparse = uniform01(engine) < 0.5;
  for (std::size_t i = 0; i < n; ++i) {
    double outflow = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (sparse && uniform01(engine) < 0.5) continue;
      q(i, j) = exponential(engine, 1.0) * (uniform01(engine) < 0.2 ? 10.0 : 1.0);
      outflow += q(i, j);
    }
    // absorption >= 5% of total outflow: a >= (0.05 / 0.95) * outflow
    const double absorb = (0.05 / 0.95) * outflow + exponential(engine, 1.0) * (uniform01(engine) < 0.5 ? 0.1 : 1.0);
    q(i, i) = -(outflow + absorb);
  }
  std::vector<double> alpha(n, 0.0);
  if (uniform01(engine) < 0.3) {
    alpha[uniform_index(engine, n)] = 1.0;
  } else {
    for (double& a : alpha) a = exponential(engine, 1.0);
  }
  return PHParams(ProbVec::normalized(std::move(alpha)), std::move(q));
}

}  // namespace majorkit
