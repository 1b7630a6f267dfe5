#pragma once

// Lorenz order on empirical samples of nonnegative values.
//
// X <=_L Y (X less variable) exactly when the Lorenz curve of X lies on or
// above the curve of Y everywhere.

#include <vector>

#include "majorkit/vector_types.hpp"

namespace majorkit {

// Nonnegative values with a strictly positive mean.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] double mean() const noexcept;

 private:
  std::vector<double> values_;
};

struct LorenzPoint {
  double population_share = 0.0;
  double income_share = 0.0;
};

// Vertices (k/n, sum of the k smallest / total) for k = 0..n.
class LorenzCurve {
 public:
  explicit LorenzCurve(std::vector<LorenzPoint> points) : points_(std::move(points)) {}

  [[nodiscard]] const std::vector<LorenzPoint>& points() const noexcept { return points_; }
  // Piecewise-linear evaluation at u in [0, 1].
  [[nodiscard]] double operator()(double u) const;

 private:
  std::vector<LorenzPoint> points_;
};

[[nodiscard]] LorenzCurve lorenz_curve(const Sample& s);

// Positional: x_below_y means the FIRST argument is below the second in the
// Lorenz order (its curve is higher everywhere).
enum class LorenzRelation { x_below_y, y_below_x, equal, crossing };

[[nodiscard]] const char* to_string(LorenzRelation r) noexcept;

inline constexpr double kLorenzTolerance = 1e-12;

// Compares the curves at the union of both vertex abscissae. Differences
// within `tolerance` count as ties.
[[nodiscard]] LorenzRelation lorenz_leq(const Sample& x, const Sample& y,
                                        double tolerance = kLorenzTolerance);

// Same comparison on curves that were already built.
[[nodiscard]] LorenzRelation lorenz_compare(const LorenzCurve& x, const LorenzCurve& y,
                                            double tolerance = kLorenzTolerance);

}  // namespace majorkit
