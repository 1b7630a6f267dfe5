#include "simplex.hpp"

#include <cmath>
#include <limits>

#include "majorkit/errors.hpp"

namespace majorkit::detail {

PhaseOneResult phase_one(std::vector<double> a, std::size_t rows, std::size_t cols,
                         std::vector<double> b) {
  constexpr double kPivotEps = 1e-12;
  if (a.size() != rows * cols || b.size() != rows) throw InvalidArgument("phase_one: shape mismatch");

  for (std::size_t i = 0; i < rows; ++i) {
    if (b[i] < 0.0) {
      b[i] = -b[i];
      for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = -a[i * cols + j];
    }
  }

  // Tableau columns: structural 0..cols-1, artificial cols..cols+rows-1, rhs last.
  const std::size_t width = cols + rows + 1;
  std::vector<double> t(rows * width, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i * width + j] = a[i * cols + j];
    t[i * width + cols + i] = 1.0;
    t[i * width + width - 1] = b[i];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<double> cost(width, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < cols || j == width - 1) cost[j] -= t[i * width + j];

  const std::size_t max_iterations = 50 * (rows + cols) + 1000;
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows; ++i) {
      const double coef = t[i * width + enter];
      if (coef <= kPivotEps) continue;
      const double ratio = t[i * width + width - 1] / coef;
      if (ratio < best - kPivotEps || (std::abs(ratio - best) <= kPivotEps && leave < rows &&
                                       basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen for phase one

    const double pivot = t[leave * width + enter];
    for (std::size_t j = 0; j < width; ++j) t[leave * width + j] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave) continue;
      const double f = t[i * width + enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[i * width + j] -= f * t[leave * width + j];
    }
    const double f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave * width + j];
    basis[leave] = enter;
  }

  PhaseOneResult result;
  result.x.assign(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    const double value = t[i * width + width - 1];
    if (basis[i] < cols) {
      result.x[basis[i]] = std::max(0.0, value);
    } else {
      result.infeasibility += std::max(0.0, value);
    }
  }
  return result;
}

}  // namespace majorkit::detail
