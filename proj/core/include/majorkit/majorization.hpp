#pragma once

// The majorization order on R^n.
//
// Convention: majorizes(x, y) means x is the MORE spread vector (x ≻ y). With
// both sorted ascending, every prefix sum of x is <= the matching prefix sum
// of y and the totals agree. relative_majorizes(p, q, s) reads "p is below q
// relative to s", so relative_majorizes(p, q, uniform) == majorizes(q, p).

#include <vector>

#include "majorkit/vector_types.hpp"

namespace majorkit {

inline constexpr double kTotalRelTolerance = 1e-9;
inline constexpr double kPartialSumSlack = 1e-12;
inline constexpr std::size_t kMaxRelativeDimension = 12;

[[nodiscard]] bool majorizes(const RealVec& x, const RealVec& y);

// Pigou-Dalton chain taking x to a permutation of y. At most n-1 steps; every
// intermediate vector is majorized by its predecessor. Indices refer to the
// coordinates of x. Throws OrderViolation unless majorizes(x, y).
[[nodiscard]] std::vector<TransferStep> transfer_chain(const RealVec& x, const RealVec& y);

// Doubly stochastic T with T·x = y, built as a permutation times the product
// of the elementary T-transforms of transfer_chain(x, y).
[[nodiscard]] SquareMatrix doubly_stochastic_witness(const RealVec& x, const RealVec& y);

[[nodiscard]] bool is_doubly_stochastic(const SquareMatrix& t);

// True iff some stochastic T (nonnegative, columns summing to one, so that it
// maps probability vectors to probability vectors) satisfies p = T·q and
// s = T·s. Decided by a phase-one simplex over the n^2 entries of T.
// Dimension is capped at kMaxRelativeDimension.
[[nodiscard]] bool relative_majorizes(const ProbVec& p, const ProbVec& q, const ProbVec& s);

}  // namespace majorkit
