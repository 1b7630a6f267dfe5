#include "majorkit/catchability.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "majorkit/errors.hpp"

namespace majorkit {

namespace {

using Rational = boost::multiprecision::cpp_rational;

class StirlingTable {
 public:
  StirlingTable() : rows_(kStirlingMax + 2) {
    rows_[0] = {BigInt(1)};
    for (unsigned n = 1; n < rows_.size(); ++n) {
      rows_[n].assign(n + 1, BigInt(0));
      for (unsigned r = 1; r <= n; ++r) {
        BigInt v = rows_[n - 1][r - 1];
        if (r <= n - 1) v += BigInt(r) * rows_[n - 1][r];
        rows_[n][r] = std::move(v);
      }
    }
  }
  [[nodiscard]] const BigInt& at(unsigned n, unsigned r) const { return rows_[n][r]; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// One extra row so nu_hat can read S(n+1, r) at the top of the range.
const StirlingTable& table() {
  static const StirlingTable t;
  return t;
}

struct PairedTrap {
  std::vector<RunningStats> tail;  // 1{R_u <= r} - 1{R_l <= r}, r = 1..captures
  std::vector<std::size_t> upper_at_most;  // #{R_u <= r}
  std::vector<std::size_t> lower_at_most;
  RunningStats nu;  // nu_hat_u - nu_hat_l
  double nu_upper = 0.0;
  double nu_lower = 0.0;
};

unsigned count_distinct(std::span<const std::size_t> labels, std::vector<unsigned char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  unsigned distinct = 0;
  for (auto l : labels) {
    if (!seen[l]) {
      seen[l] = 1;
      ++distinct;
    }
  }
  return distinct;
}

}  // namespace

const BigInt& stirling2(unsigned n, unsigned r) {
  if (n > kStirlingMax || r > n)
    throw InvalidArgument("stirling2: need 0 <= r <= n <= " + std::to_string(kStirlingMax));
  return table().at(n, r);
}

double nu_hat(unsigned n, unsigned r) {
  if (r == 0 || r > n) throw InvalidArgument("nu_hat: need 1 <= r <= n");
  if (n >= kStirlingMax) throw InvalidArgument("nu_hat: n must be < " + std::to_string(kStirlingMax));
  const Rational ratio(table().at(n + 1, r), table().at(n, r));
  return ratio.convert_to<double>();
}

TrapResult trap_simulation(const ProbVec& p, unsigned captures, std::size_t trials, std::uint64_t seed) {
  if (captures < 1) throw InvalidArgument("trap_simulation: captures must be >= 1");
  if (trials < 1) throw InvalidArgument("trap_simulation: trials must be >= 1");
  const std::size_t species = p.size();
  std::vector<double> estimator(captures + 1, 0.0);
  for (unsigned r = 1; r <= captures; ++r) estimator[r] = nu_hat(captures, r);
  const DiscreteSampler draw(p.values());

  struct Part {
    std::vector<std::size_t> counts;
    RunningStats distinct;
    RunningStats nu;
  };
  const auto parts = run_chunked(trials, seed, [&](Engine& engine, std::size_t lo, std::size_t hi) {
    Part part;
    part.counts.assign(captures + 1, 0);
    std::vector<std::size_t> labels(captures);
    std::vector<unsigned char> seen(species);
    for (std::size_t t = lo; t < hi; ++t) {
      for (auto& l : labels) l = draw(engine);
      const unsigned r = count_distinct(labels, seen);
      ++part.counts[r];
      part.distinct.push(r);
      part.nu.push(estimator[r]);
    }
    return part;
  });

  TrapResult result;
  result.distinct_distribution.assign(captures + 1, 0.0);
  RunningStats distinct, nu;
  for (const auto& part : parts) {
    for (unsigned r = 0; r <= captures; ++r) result.distinct_distribution[r] += static_cast<double>(part.counts[r]);
    distinct.merge(part.distinct);
    nu.merge(part.nu);
  }
  for (double& d : result.distinct_distribution) d /= static_cast<double>(trials);
  result.distinct_mean = {distinct.mean(), distinct.standard_error()};
  result.nu_hat_mean = {nu.mean(), nu.standard_error()};
  return result;
}

CatchabilityReport schur_bias_experiment(unsigned species, unsigned captures, std::size_t pairs,
                                         std::size_t trials, std::uint64_t seed) {
  if (species < 2) throw InvalidArgument("schur_bias_experiment: need at least 2 species");
  if (species > captures) throw InvalidArgument("schur_bias_experiment: need species <= captures");
  if (trials < 1) throw InvalidArgument("schur_bias_experiment: trials must be >= 1");

  std::vector<double> estimator(captures + 1, 0.0);
  for (unsigned r = 1; r <= captures; ++r) estimator[r] = nu_hat(captures, r);

  CatchabilityReport report;
  report.lower_tail.trials = pairs;
  report.bias.trials = pairs;
  for (std::size_t i = 0; i < pairs; ++i) {
    const ComparablePair pair = sample_comparable_pair(species, derive_seed(seed, 2 * i), constraint::Probability{});
    const DiscreteSampler upper(pair.upper.values());
    const DiscreteSampler lower(pair.lower.values());

    const auto parts = run_chunked(trials, derive_seed(seed, 2 * i + 1),
                                   [&](Engine& engine, std::size_t lo, std::size_t hi) {
      PairedTrap acc;
      acc.tail.resize(captures + 1);
      acc.upper_at_most.assign(captures + 1, 0);
      acc.lower_at_most.assign(captures + 1, 0);
      std::vector<std::size_t> lu(captures), ll(captures);
      std::vector<unsigned char> seen(species);
      for (std::size_t t = lo; t < hi; ++t) {
        for (unsigned c = 0; c < captures; ++c) {
          const double u = uniform01(engine);
          lu[c] = upper(u);
          ll[c] = lower(u);
        }
        const unsigned ru = count_distinct(lu, seen);
        const unsigned rl = count_distinct(ll, seen);
        for (unsigned r = 1; r <= captures; ++r) {
          acc.tail[r].push(static_cast<double>(ru <= r) - static_cast<double>(rl <= r));
          acc.upper_at_most[r] += ru <= r;
          acc.lower_at_most[r] += rl <= r;
        }
        acc.nu.push(estimator[ru] - estimator[rl]);
        acc.nu_upper += estimator[ru];
        acc.nu_lower += estimator[rl];
      }
      return acc;
    });

    PairedTrap total;
    total.tail.resize(captures + 1);
    total.upper_at_most.assign(captures + 1, 0);
    total.lower_at_most.assign(captures + 1, 0);
    for (const auto& part : parts) {
      for (unsigned r = 1; r <= captures; ++r) {
        total.tail[r].merge(part.tail[r]);
        total.upper_at_most[r] += part.upper_at_most[r];
        total.lower_at_most[r] += part.lower_at_most[r];
      }
      total.nu.merge(part.nu);
      total.nu_upper += part.nu_upper;
      total.nu_lower += part.nu_lower;
    }

    const double n = static_cast<double>(trials);
    for (unsigned r = 1; r <= captures; ++r) {
      const double slack = 3.0 * total.tail[r].standard_error();
      if (total.tail[r].mean() < -slack) {
        report.lower_tail.record({pair, static_cast<double>(total.upper_at_most[r]) / n,
                                  static_cast<double>(total.lower_at_most[r]) / n, slack});
        break;
      }
    }
    const double slack = 3.0 * total.nu.standard_error();
    if (total.nu.mean() > slack)
      report.bias.record({pair, total.nu_upper / n, total.nu_lower / n, slack});
  }
  return report;
}

}  // namespace majorkit
