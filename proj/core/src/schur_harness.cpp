#include "majorkit/schur_harness.hpp"

#include <cmath>
#include <sstream>

#include "majorkit/errors.hpp"
#include "majorkit/majorization.hpp"

namespace majorkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Picks two distinct indices; returns (giver, taker) with value[giver] <= value[taker].
std::pair<std::size_t, std::size_t> pick_pair(const std::vector<double>& v, Engine& engine) {
  const std::size_t n = v.size();
  const std::size_t a = uniform_index(engine, n);
  std::size_t b = uniform_index(engine, n - 1);
  if (b >= a) ++b;
  return v[a] <= v[b] ? std::pair{a, b} : std::pair{b, a};
}

int transfer_count(Engine& engine) { return 1 + static_cast<int>(uniform_index(engine, 3)); }

void spread_real(std::vector<double>& v, Engine& engine, bool keep_nonnegative) {
  const int moves = transfer_count(engine);
  for (int m = 0; m < moves; ++m) {
    auto [giver, taker] = pick_pair(v, engine);
    double room = 0.0;
    if (keep_nonnegative) {
      room = v[giver];
    } else {
      double lo = v[0];
      double hi = v[0];
      for (double e : v) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
      }
      room = std::max(1.0, hi - lo);
    }
    const double amount = uniform01(engine) * room;
    v[giver] -= amount;
    v[taker] += amount;
  }
}

}  // namespace

std::string describe(const Constraint& c) {
  return std::visit(Overloaded{
                        [](constraint::None) { return std::string("none"); },
                        [](constraint::Nonnegative) { return std::string("nonnegative"); },
                        [](constraint::Probability) { return std::string("probability"); },
                        [](constraint::IntegerComposition ic) {
                          return "composition:" + std::to_string(ic.total);
                        },
                    },
                    c);
}

ComparablePair sample_comparable_pair(std::size_t n, Engine& engine, const Constraint& c) {
  if (n < 2) throw InvalidArgument("sample_comparable_pair: n must be >= 2");

  return std::visit(
      Overloaded{
          [&](constraint::None) {
            std::vector<double> lower(n);
            for (double& e : lower) e = 2.0 * uniform01(engine) - 1.0;
            std::vector<double> upper = lower;
            spread_real(upper, engine, false);
            return ComparablePair{RealVec(std::move(upper)), RealVec(std::move(lower))};
          },
          [&](constraint::Nonnegative) {
            std::vector<double> lower(n);
            for (double& e : lower) e = exponential(engine, 1.0);
            std::vector<double> upper = lower;
            spread_real(upper, engine, true);
            return ComparablePair{RealVec(std::move(upper)), RealVec(std::move(lower))};
          },
          [&](constraint::Probability) {
            std::vector<double> w(n);
            for (double& e : w) e = exponential(engine, 1.0);
            const ProbVec lower_p = ProbVec::normalized(std::move(w));
            std::vector<double> upper = lower_p.vector();
            spread_real(upper, engine, true);
            // Transfers preserve the total up to rounding; renormalize to stay a ProbVec.
            const ProbVec upper_p = ProbVec::normalized(std::move(upper));
            return ComparablePair{upper_p.as_real(), lower_p.as_real()};
          },
          [&](constraint::IntegerComposition ic) {
            if (ic.total < 0)
              throw InvalidArgument("sample_comparable_pair: composition total must be >= 0");
            std::vector<double> lower(n, 0.0);
            for (long unit = 0; unit < ic.total; ++unit) lower[uniform_index(engine, n)] += 1.0;
            std::vector<double> upper = lower;
            const int moves = transfer_count(engine);
            for (int m = 0; m < moves; ++m) {
              auto [giver, taker] = pick_pair(upper, engine);
              if (upper[giver] < 1.0) continue;
              upper[giver] -= 1.0;
              upper[taker] += 1.0;
            }
            return ComparablePair{RealVec(std::move(upper)), RealVec(std::move(lower))};
          },
      },
      c);
}

ComparablePair sample_comparable_pair(std::size_t n, std::uint64_t seed, const Constraint& c) {
  Engine engine(derive_seed(seed, 0));
  return sample_comparable_pair(n, engine, c);
}

SchurReport check_schur(const VectorFunction& g, std::size_t n, Sense sense, std::size_t trials,
                        const Constraint& c, double tolerance, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("check_schur: trials must be >= 1");
  if (!(tolerance >= 0.0)) throw InvalidArgument("check_schur: tolerance must be >= 0");

  auto evaluate = [&](const RealVec& v) {
    const double value = g(v);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "check_schur: g returned a non-finite value at (";
      for (std::size_t i = 0; i < v.size(); ++i) msg << (i ? "," : "") << v[i];
      msg << ")";
      throw InvalidArgument(msg.str());
    }
    return value;
  };

  SchurReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    ComparablePair pair = sample_comparable_pair(n, derive_seed(seed, t), c);
    const double gu = evaluate(pair.upper);
    const double gl = evaluate(pair.lower);
    const bool bad = sense == Sense::convex ? gu < gl - tolerance : gu > gl + tolerance;
    if (bad) report.record({std::move(pair), gu, gl, tolerance});
  }
  return report;
}

VectorFunction separable(std::function<double(double)> h) {
  return [h = std::move(h)](const RealVec& x) {
    double acc = 0.0;
    for (double e : x) acc += h(e);
    return acc;
  };
}

double xlogx(double t) { return t == 0.0 ? 0.0 : t * std::log(t); }

}  // namespace majorkit
