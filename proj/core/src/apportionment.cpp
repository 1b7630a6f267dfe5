#include "majorkit/apportionment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "majorkit/errors.hpp"
#include "majorkit/majorization.hpp"

namespace majorkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieRelTolerance = 1e-12;

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Priority as (infinite?, value): infinite priorities rank among themselves by votes.
struct Priority {
  bool infinite = false;
  double value = 0.0;
};

Priority priority_of(double votes, double p, unsigned long held) {
  const double s = signpost(p, held);
  if (s == 0.0) return {true, votes};
  return {false, votes / s};
}

bool tied(const Priority& a, const Priority& b) {
  if (a.infinite != b.infinite) return false;
  return std::abs(a.value - b.value) <= kTieRelTolerance * std::max(std::abs(a.value), std::abs(b.value));
}

bool greater(const Priority& a, const Priority& b) {
  if (a.infinite != b.infinite) return a.infinite;
  return a.value > b.value;
}

}  // namespace

DivisorRule DivisorRule::adams() { return {-kInf}; }
DivisorRule DivisorRule::dean() { return {-1.0}; }
DivisorRule DivisorRule::hill() { return {0.0}; }
DivisorRule DivisorRule::webster() { return {1.0}; }
DivisorRule DivisorRule::jefferson() { return {kInf}; }

DivisorRule DivisorRule::parse(const std::string& text) {
  const std::string t = lowercase(text);
  if (t == "adams") return adams();
  if (t == "dean") return dean();
  if (t == "hill") return hill();
  if (t == "webster") return webster();
  if (t == "jefferson") return jefferson();
  if (t.rfind("p=", 0) == 0) {
    const std::string v = t.substr(2);
    if (v == "inf" || v == "+inf") return {kInf};
    if (v == "-inf") return {-kInf};
    double p = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), p);
    if (res.ec == std::errc() && res.ptr == v.data() + v.size() && std::isfinite(p)) return {p};
  }
  throw InvalidArgument("unknown apportionment rule '" + text +
                        "' (expected adams, dean, hill, webster, jefferson or p=<value>)");
}

std::string DivisorRule::name() const {
  if (p == -kInf) return "adams";
  if (p == -1.0) return "dean";
  if (p == 0.0) return "hill";
  if (p == 1.0) return "webster";
  if (p == kInf) return "jefferson";
  std::ostringstream out;
  out.precision(17);
  out << "p=" << p;
  return out.str();
}

double signpost(double p, unsigned long k) {
  const double a = static_cast<double>(k);
  const double b = a + 1.0;
  if (p == -kInf) return a;
  if (p == kInf) return b;
  if (k == 0 && p <= 0.0) return 0.0;
  if (p == 0.0) return std::sqrt(a * b);
  if (p == -1.0) return 2.0 * a * b / (a + b);
  if (p == 1.0) return a + 0.5;
  // Factor out b to keep the power mean in range for large |p|.
  const double ratio = a / b;
  const double mean = (std::pow(ratio, p) + 1.0) / 2.0;
  return std::clamp(b * std::pow(mean, 1.0 / p), a, b);
}

bool Apportionment::tie_affected() const noexcept {
  return std::any_of(ties.begin(), ties.end(), [](const TieEvent& t) { return t.decisive; });
}

Apportionment apportion(const Election& e) {
  const std::size_t parties = e.votes.size();
  if (parties == 0) throw InvalidArgument("apportion: need at least one party");
  for (std::size_t i = 0; i < parties; ++i)
    if (!(e.votes[i] > 0.0) || !std::isfinite(e.votes[i]))
      throw InvalidArgument("apportion: votes must be finite and > 0 (party " + std::to_string(i) + ")");
  if (e.rule.zero_first_signpost() && e.seats > 0 && e.seats < parties)
    throw InvalidArgument("apportion: rule " + e.rule.name() + " gives every party a first seat, so it needs at least " +
                          std::to_string(parties) + " seats");

  Apportionment out;
  out.seats.assign(parties, 0);
  std::vector<Priority> prio(parties);
  for (std::size_t i = 0; i < parties; ++i) prio[i] = priority_of(e.votes[i], e.rule.p, 0);

  for (unsigned long seat = 1; seat <= e.seats; ++seat) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < parties; ++i) {
      if (greater(prio[i], prio[best]) && !tied(prio[i], prio[best])) {
        best = i;
      } else if (tied(prio[i], prio[best])) {
        if (e.votes[i] > e.votes[best]) best = i;  // equal votes keep the lower index
      }
    }
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < parties; ++i)
      if (tied(prio[i], prio[best])) group.push_back(i);
    if (group.size() > 1) {
      const bool decisive = seat + group.size() - 1 > e.seats;
      // Record each tied group once, at the seat where it first appears.
      if (out.ties.empty() || out.ties.back().parties != group ||
          out.ties.back().seat_index + out.ties.back().parties.size() <= seat)
        out.ties.push_back({seat, group, decisive});
    }
    out.trace.push_back({seat, best, prio[best].infinite ? kInf : prio[best].value});
    ++out.seats[best];
    prio[best] = priority_of(e.votes[best], e.rule.p, out.seats[best]);
  }
  return out;
}

ChainReport rule_chain_check(const std::vector<double>& votes, unsigned long seats) {
  ChainReport report;
  for (const DivisorRule& rule : {DivisorRule::adams(), DivisorRule::dean(), DivisorRule::hill(),
                                  DivisorRule::webster(), DivisorRule::jefferson()})
    report.entries.push_back({rule, apportion({votes, seats, rule})});

  auto as_real = [](const std::vector<unsigned long>& s) {
    return RealVec(std::vector<double>(s.begin(), s.end()));
  };
  for (std::size_t a = 0; a < report.entries.size(); ++a) {
    if (report.entries[a].result.tie_affected()) report.tie_affected = true;
    for (std::size_t b = a + 1; b < report.entries.size(); ++b) {
      if (report.entries[a].result.tie_affected() || report.entries[b].result.tie_affected()) continue;
      ++report.comparisons;
      if (!majorizes(as_real(report.entries[b].result.seats), as_real(report.entries[a].result.seats)))
        report.violations.push_back({a, b});
    }
  }
  return report;
}

}  // namespace majorkit
