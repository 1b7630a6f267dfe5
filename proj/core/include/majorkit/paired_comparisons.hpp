#pragma once

// Win-probability matrices for a league of k teams without ties.

#include <cstdint>
#include <optional>
#include <vector>

#include "majorkit/random.hpp"
#include "majorkit/vector_types.hpp"

namespace majorkit {

inline constexpr double kComplementTolerance = 1e-12;
inline constexpr double kTransitivitySlack = 1e-12;

// p(i, j) is the probability team i beats team j; p(i, j) + p(j, i) = 1.
// The diagonal is not part of the model and reads as NaN.
class PairwiseMatrix {
 public:
  // Row-major k*k values; diagonal entries are ignored.
  PairwiseMatrix(std::size_t k, std::vector<double> row_major);

  [[nodiscard]] std::size_t teams() const noexcept { return k_; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const;
  // Sets p(i, j) = value and p(j, i) = 1 - value.
  void set(std::size_t i, std::size_t j, double value);

  // The k(k-1) off-diagonal entries, row by row.
  [[nodiscard]] RealVec flattened() const;

 private:
  std::size_t k_ = 0;
  std::vector<double> p_;
};

[[nodiscard]] RealVec row_strengths(const PairwiseMatrix& m);
[[nodiscard]] bool is_weakly_transitive(const PairwiseMatrix& m);
[[nodiscard]] bool is_strongly_transitive(const PairwiseMatrix& m);

// matrix_majorizes(P, Q): the flattened entries of P majorize those of Q.
[[nodiscard]] bool matrix_majorizes(const PairwiseMatrix& p, const PairwiseMatrix& q);

// Adds delta to q(i,j), q(j,l), q(l,i) and subtracts it from the transposed
// entries. Row strengths and complementarity are preserved.
void apply_three_cycle(PairwiseMatrix& m, std::size_t i, std::size_t j, std::size_t l, double delta);

// Randomized search for Q with the same row strengths whose flattened vector
// is strictly majorized by P's (Q* below P*, not a rearrangement). Each
// attempt applies one to three random 3-cycle perturbations with |delta| <=
// step to P. Returns the first such Q, or nothing after `trials` attempts.
// Throws InvalidArgument for k < 3 or step outside (0, 0.5).
[[nodiscard]] std::optional<PairwiseMatrix> minimality_falsifier(const PairwiseMatrix& p,
                                                                 std::size_t trials, double step,
                                                                 std::uint64_t seed = kDefaultSeed);

// A random strongly transitive matrix: random strength ranking, and entries
// above 0.5 that never decrease as the rank gap widens.
[[nodiscard]] PairwiseMatrix random_strongly_transitive(std::size_t k, Engine& engine);

// Independent uniform upper-triangle entries.
[[nodiscard]] PairwiseMatrix random_pairwise(std::size_t k, Engine& engine);

}  // namespace majorkit
