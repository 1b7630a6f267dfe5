#pragma once

// Empirical Schur convexity checks: draw pairs (upper, lower) with
// majorizes(upper, lower), evaluate g on both, and record every pair where g
// moves the wrong way. Violations are data, never exceptions.

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "majorkit/random.hpp"
#include "majorkit/vector_types.hpp"

namespace majorkit {

struct ComparablePair {
  RealVec upper;  // the more spread vector
  RealVec lower;
};

namespace constraint {
struct None {};
struct Nonnegative {};
struct Probability {};
struct IntegerComposition {
  long total = 0;
};
}  // namespace constraint

using Constraint = std::variant<constraint::None, constraint::Nonnegative, constraint::Probability,
                                constraint::IntegerComposition>;

[[nodiscard]] std::string describe(const Constraint& c);

enum class Sense { convex, concave };
enum class Verdict { consistent, violated };

struct SchurViolation {
  ComparablePair pair;
  double g_upper = 0.0;
  double g_lower = 0.0;
  double slack = 0.0;  // tolerance that was allowed for this pair
};

struct SchurReport {
  std::size_t trials = 0;
  std::vector<SchurViolation> violations;
  Verdict verdict = Verdict::consistent;

  [[nodiscard]] bool consistent() const noexcept { return verdict == Verdict::consistent; }
  void record(SchurViolation v) {
    violations.push_back(std::move(v));
    verdict = Verdict::violated;
  }
};

using VectorFunction = std::function<double(const RealVec&)>;

inline constexpr double kExactTolerance = 1e-9;

// Draws `lower` from the constrained domain and pushes it apart with one to
// three reverse transfers (smaller coordinate gives to a larger one) that stay
// inside the constraint. Deterministic in (n, seed, constraint).
[[nodiscard]] ComparablePair sample_comparable_pair(std::size_t n, std::uint64_t seed,
                                                    const Constraint& c);

// Engine-driven variant used when a caller already owns a stream.
[[nodiscard]] ComparablePair sample_comparable_pair(std::size_t n, Engine& engine,
                                                    const Constraint& c);

// Convex sense flags pairs with g(upper) < g(lower) - tolerance; concave sense
// flags g(upper) > g(lower) + tolerance. Pair t is drawn from
// derive_seed(seed, t). Throws InvalidArgument if g returns a non-finite value.
[[nodiscard]] SchurReport check_schur(const VectorFunction& g, std::size_t n, Sense sense,
                                      std::size_t trials, const Constraint& c,
                                      double tolerance = kExactTolerance,
                                      std::uint64_t seed = kDefaultSeed);

// x -> sum_i h(x_i)
[[nodiscard]] VectorFunction separable(std::function<double(double)> h);

// t log t with the convention 0 log 0 = 0.
[[nodiscard]] double xlogx(double t);

}  // namespace majorkit
