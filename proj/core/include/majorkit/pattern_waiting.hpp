#pragma once

// Waiting time N until the last k observations of an i.i.d. stream over the
// symbols {0, ..., k-1} are all distinct.
//
// The chain state is the longest suffix of the stream made of distinct
// symbols. Its order matters: a repeated symbol truncates the suffix at the
// earlier occurrence.

#include <cstdint>
#include <span>
#include <vector>

#include "majorkit/random.hpp"
#include "majorkit/vector_types.hpp"

namespace majorkit {

inline constexpr std::size_t kMaxExactSymbols = 7;
inline constexpr std::size_t kWaitingStepCap = 10'000'000;

using SuffixState = std::vector<std::uint8_t>;

// The state reached from `state` after observing `symbol`.
[[nodiscard]] SuffixState next_suffix(const SuffixState& state, std::uint8_t symbol);

class SuffixChain {
 public:
  [[nodiscard]] std::size_t symbols() const noexcept { return probs_.size(); }
  [[nodiscard]] std::size_t state_count() const noexcept { return states_.size(); }
  [[nodiscard]] std::size_t transient_count() const noexcept { return transient_; }
  [[nodiscard]] const SuffixState& state(std::size_t i) const { return states_[i]; }
  [[nodiscard]] std::size_t index_of(const SuffixState& s) const;
  [[nodiscard]] bool is_absorbing(std::size_t i) const noexcept { return i >= transient_; }
  // Successor of state i on symbol v.
  [[nodiscard]] std::size_t next(std::size_t i, std::size_t v) const {
    return next_[i * probs_.size() + v];
  }
  [[nodiscard]] std::span<const double> probabilities() const noexcept { return probs_; }

 private:
  friend SuffixChain build_chain(const ProbVec& p);

  std::vector<double> probs_;
  std::vector<SuffixState> states_;  // transient states first, the empty suffix at index 0
  std::vector<std::size_t> next_;    // transient rows only
  std::vector<std::uint64_t> codes_; // sorted encodings for index_of
  std::vector<std::size_t> code_index_;
  std::size_t transient_ = 0;
};

// Throws SizeError for more than kMaxExactSymbols symbols.
[[nodiscard]] SuffixChain build_chain(const ProbVec& p);

// E(N) by a first-step linear solve. Throws NumericError if some symbol has
// probability zero (the target run can never occur).
[[nodiscard]] double expected_waiting(const ProbVec& p);
[[nodiscard]] double expected_waiting(const SuffixChain& chain);

// P(N > n): mass left in transient states after n steps.
[[nodiscard]] double tail_probability(const ProbVec& p, std::size_t n);
// All of P(N > 0), ..., P(N > max_n) in one sweep.
[[nodiscard]] std::vector<double> tail_probabilities(const SuffixChain& chain, std::size_t max_n);

// Direct stream simulation; needs every p_i > 0.
[[nodiscard]] Estimate waiting_monte_carlo(const ProbVec& p, std::size_t trials,
                                           std::uint64_t seed = kDefaultSeed);

}  // namespace majorkit
