#pragma once

// Escape probability of a susceptible individual who makes J contacts in
// blocks k_1, ..., k_J (one partner per block, chosen by preference alpha;
// partners may repeat across blocks).

#include <cstdint>
#include <vector>

#include "majorkit/random.hpp"
#include "majorkit/schur_harness.hpp"
#include "majorkit/vector_types.hpp"

namespace majorkit {

inline constexpr unsigned kMaxExhaustiveContacts = 10;
inline constexpr std::size_t kMaxExhaustiveCarriers = 5;
inline constexpr double kEpidemicSlack = 1e-12;

class Lifestyle {
 public:
  explicit Lifestyle(std::vector<long> blocks);
  [[nodiscard]] const std::vector<long>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] long contacts() const noexcept { return total_; }
  [[nodiscard]] RealVec as_real() const;

 private:
  std::vector<long> blocks_;
  long total_ = 0;
};

// alpha: strictly positive preferences over the carriers; avoid[i]: the
// probability a single contact with carrier i does not infect.
class ContactModel {
 public:
  ContactModel(ProbVec alpha, std::vector<double> avoid);
  [[nodiscard]] const ProbVec& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const std::vector<double>& avoid() const noexcept { return avoid_; }
  [[nodiscard]] std::size_t carriers() const noexcept { return avoid_.size(); }

 private:
  ProbVec alpha_;
  std::vector<double> avoid_;
};

// prod over blocks of sum_j alpha_j avoid_j^{k_i}; an empty block gives 1.
[[nodiscard]] double escape_probability(const Lifestyle& k, const ContactModel& m);

[[nodiscard]] ContactModel random_contact_model(std::size_t carriers, Engine& engine);

// Every composition of `contacts` into `contacts` nonnegative parts.
[[nodiscard]] std::vector<std::vector<long>> compositions(unsigned contacts);

struct LifestyleSchurReport {
  SchurReport report;                 // violations at kEpidemicSlack
  std::size_t comparable_pairs = 0;   // composition pairs covered per model
  std::size_t compositions = 0;
  bool extremes_ordered = true;       // monogamous >= random for every model
};

// Exhaustive check over all majorization-comparable pairs of compositions of
// J, for `models` random contact models on n carriers. Compositions are
// grouped by their sorted shape; for each comparable shape pair the minimum of
// H over the upper class is compared with the maximum over the lower class,
// which covers every composition pair exactly.
[[nodiscard]] LifestyleSchurReport lifestyle_schur_check(unsigned contacts, std::size_t carriers,
                                                         std::size_t models,
                                                         std::uint64_t seed = kDefaultSeed);

}  // namespace majorkit
