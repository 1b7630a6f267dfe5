#pragma once

// Divisor methods of apportionment with power-mean signposts
//   s_p(k) = ((k^p + (k+1)^p) / 2)^(1/p),   -inf <= p <= +inf,
// allocated by highest averages: each seat goes to the party maximizing
// votes / s_p(seats held).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace majorkit {

// Rule p values. Adams rounds up, Jefferson rounds down.
struct DivisorRule {
  double p = 1.0;

  static DivisorRule adams();
  static DivisorRule dean();
  static DivisorRule hill();
  static DivisorRule webster();
  static DivisorRule jefferson();
  // "adams", "dean", "hill", "webster", "jefferson", or "p=<value>" with
  // value a real number, "inf" or "-inf".
  static DivisorRule parse(const std::string& text);

  [[nodiscard]] std::string name() const;
  // True when s_p(0) = 0, i.e. every party is guaranteed a first seat.
  [[nodiscard]] bool zero_first_signpost() const noexcept { return p <= 0.0; }
};

[[nodiscard]] double signpost(double p, unsigned long k);

struct Election {
  std::vector<double> votes;  // strictly positive, counts or shares
  unsigned long seats = 0;
  DivisorRule rule;
};

// Parties whose priorities tied (relative 1e-12) at the moment seat
// `seat_index` (1-based) was awarded. A tie is decisive when the house fills
// up before every tied party is served, so the outcome depends on the
// tie-break.
struct TieEvent {
  unsigned long seat_index = 0;
  std::vector<std::size_t> parties;
  bool decisive = false;
};

struct Award {
  unsigned long seat_index = 0;
  std::size_t party = 0;
  double priority = 0.0;  // +inf for a party holding zero seats under s(0) = 0
};

struct Apportionment {
  std::vector<unsigned long> seats;
  std::vector<TieEvent> ties;
  std::vector<Award> trace;

  [[nodiscard]] bool tie_affected() const noexcept;
};

// Ties go to the larger vote, then the lower party index. Throws
// InvalidArgument for non-positive votes, and when 0 < seats < parties under
// a rule with s(0) = 0.
[[nodiscard]] Apportionment apportion(const Election& e);

struct ChainEntry {
  DivisorRule rule;
  Apportionment result;
};

struct ChainViolation {
  std::size_t smaller;  // index into entries (lower p)
  std::size_t larger;
};

struct ChainReport {
  std::vector<ChainEntry> entries;  // Adams, Dean, Hill, Webster, Jefferson
  std::vector<ChainViolation> violations;
  std::size_t comparisons = 0;   // rule pairs actually asserted
  bool tie_affected = false;     // some rule had a decisive tie; its pairs are skipped

  [[nodiscard]] bool holds() const noexcept { return violations.empty(); }
};

// Asserts majorizes(seats under p', seats under p) for every p <= p' among
// the five classical rules.
[[nodiscard]] ChainReport rule_chain_check(const std::vector<double>& votes, unsigned long seats);

}  // namespace majorkit
