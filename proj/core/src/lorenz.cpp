#include "majorkit/lorenz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "majorkit/errors.hpp"

namespace majorkit {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("Sample: needs at least one value");
  double total = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < 0.0)
      throw InvalidArgument("Sample: value " + std::to_string(i) + " is negative or not finite");
    total += v;
  }
  if (!(total > 0.0)) throw InvalidArgument("Sample: mean must be positive (all values are zero)");
}

double Sample::mean() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

double LorenzCurve::operator()(double u) const {
  if (u <= points_.front().population_share) return points_.front().income_share;
  if (u >= points_.back().population_share) return points_.back().income_share;
  auto hi = std::upper_bound(points_.begin(), points_.end(), u,
                             [](double v, const LorenzPoint& p) { return v < p.population_share; });
  auto lo = hi - 1;
  const double width = hi->population_share - lo->population_share;
  const double frac = width > 0.0 ? (u - lo->population_share) / width : 0.0;
  return lo->income_share + frac * (hi->income_share - lo->income_share);
}

LorenzCurve lorenz_curve(const Sample& s) {
  std::vector<double> v = s.values();
  std::sort(v.begin(), v.end());
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  const std::size_t n = v.size();

  std::vector<LorenzPoint> points;
  points.reserve(n + 1);
  points.push_back({0.0, 0.0});
  double acc = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    acc += v[k - 1];
    points.push_back({static_cast<double>(k) / static_cast<double>(n), k == n ? 1.0 : acc / total});
  }
  return LorenzCurve(std::move(points));
}

const char* to_string(LorenzRelation r) noexcept {
  switch (r) {
    case LorenzRelation::x_below_y: return "x_below_y";
    case LorenzRelation::y_below_x: return "y_below_x";
    case LorenzRelation::equal: return "equal";
    case LorenzRelation::crossing: return "crossing";
  }
  return "unknown";
}

LorenzRelation lorenz_compare(const LorenzCurve& x, const LorenzCurve& y, double tolerance) {
  const std::size_t nx = x.points().size() - 1;
  const std::size_t ny = y.points().size() - 1;
  bool x_above = false;  // some abscissa with L_x > L_y + tol
  bool y_above = false;

  auto visit = [&](double diff) {
    if (diff > tolerance) x_above = true;
    if (diff < -tolerance) y_above = true;
  };

  if (nx == ny) {
    for (std::size_t k = 0; k <= nx; ++k)
      visit(x.points()[k].income_share - y.points()[k].income_share);
  } else {
    for (const auto& p : x.points()) visit(p.income_share - y(p.population_share));
    for (const auto& p : y.points()) visit(x(p.population_share) - p.income_share);
  }

  if (x_above && y_above) return LorenzRelation::crossing;
  if (x_above) return LorenzRelation::x_below_y;
  if (y_above) return LorenzRelation::y_below_x;
  return LorenzRelation::equal;
}

LorenzRelation lorenz_leq(const Sample& x, const Sample& y, double tolerance) {
  return lorenz_compare(lorenz_curve(x), lorenz_curve(y), tolerance);
}

}  // namespace majorkit
