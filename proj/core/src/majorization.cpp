#include "majorkit/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "majorkit/errors.hpp"
#include "simplex.hpp"

namespace majorkit {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
}

// Indices of v ordered by decreasing value; equal values keep index order.
std::vector<std::size_t> descending_order(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return idx;
}

double magnitude(std::span<const double> v) {
  double m = 1.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

}  // namespace

bool majorizes(const RealVec& x, const RealVec& y) {
  require_same_length(x.size(), y.size(), "majorizes");
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  const std::size_t n = xs.size();
  double px = 0.0;
  double py = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py + kPartialSumSlack) return false;
  }
  const double tx = px + xs[n - 1];
  const double ty = py + ys[n - 1];
  const double scale = std::max({1.0, std::abs(tx), std::abs(ty)});
  return std::abs(tx - ty) <= kTotalRelTolerance * scale;
}

std::vector<TransferStep> transfer_chain(const RealVec& x, const RealVec& y) {
  if (!majorizes(x, y)) throw OrderViolation("transfer_chain: x does not majorize y");

  const std::size_t n = x.size();
  const auto order = descending_order(x.values());
  std::vector<double> target(y.begin(), y.end());
  std::sort(target.begin(), target.end(), std::greater<>());

  // Working copy in x's decreasing order: work[r] = x[order[r]].
  std::vector<double> work(n);
  for (std::size_t r = 0; r < n; ++r) work[r] = x[order[r]];

  const double tol = 1e-12 * std::max(magnitude(x.values()), magnitude(y.values()));
  std::vector<TransferStep> steps;
  while (steps.size() < n) {
    // Largest position with a surplus, then the first deficit after it.
    std::size_t j = n;
    for (std::size_t r = n; r-- > 0;) {
      if (work[r] - target[r] > tol) {
        j = r;
        break;
      }
    }
    if (j == n) break;
    std::size_t k = n;
    for (std::size_t r = j + 1; r < n; ++r) {
      if (target[r] - work[r] > tol) {
        k = r;
        break;
      }
    }
    if (k == n) break;

    const double surplus = work[j] - target[j];
    const double deficit = target[k] - work[k];
    const double amount = std::min(surplus, deficit);
    if (surplus <= deficit) {
      work[j] = target[j];
      work[k] += amount;
    } else {
      work[k] = target[k];
      work[j] -= amount;
    }
    steps.push_back(TransferStep{order[j], order[k], amount});
  }
  return steps;
}

SquareMatrix doubly_stochastic_witness(const RealVec& x, const RealVec& y) {
  const auto steps = transfer_chain(x, y);
  const std::size_t n = x.size();

  SquareMatrix t = SquareMatrix::identity(n);
  std::vector<double> current(x.begin(), x.end());
  for (const auto& step : steps) {
    const std::size_t d = step.donor;
    const std::size_t r = step.recipient;
    const double gap = current[d] - current[r];
    // Fraction of the gap moved; the elementary T-transform mixes rows d and r.
    const double lambda = std::clamp(step.amount / gap, 0.0, 0.5);
    for (std::size_t c = 0; c < n; ++c) {
      const double a = t(d, c);
      const double b = t(r, c);
      t(d, c) = (1.0 - lambda) * a + lambda * b;
      t(r, c) = lambda * a + (1.0 - lambda) * b;
    }
    const double vd = current[d];
    const double vr = current[r];
    current[d] = (1.0 - lambda) * vd + lambda * vr;
    current[r] = lambda * vd + (1.0 - lambda) * vr;
  }

  // After the chain, current[ox[r]] holds the r-th largest entry of y; route
  // it to where y keeps that entry.
  const auto ox = descending_order(x.values());
  const auto oy = descending_order(y.values());
  SquareMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(oy[r], c) = t(ox[r], c);
  return out;
}

bool is_doubly_stochastic(const SquareMatrix& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (t(i, j) < -1e-12) return false;
      row += t(i, j);
      col += t(j, i);
    }
    if (std::abs(row - 1.0) > 1e-9 || std::abs(col - 1.0) > 1e-9) return false;
  }
  return true;
}

bool relative_majorizes(const ProbVec& p, const ProbVec& q, const ProbVec& s) {
  require_same_length(p.size(), q.size(), "relative_majorizes");
  require_same_length(p.size(), s.size(), "relative_majorizes");
  const std::size_t n = p.size();
  if (n > kMaxRelativeDimension)
    throw SizeError("relative_majorizes: dimension " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxRelativeDimension));

  // Unknowns t_ij at column i*n + j. Constraint blocks: column sums, T q = p, T s = s.
  const std::size_t cols = n * n;
  const std::size_t rows = 3 * n;
  std::vector<double> a(rows * cols, 0.0);
  std::vector<double> b(rows, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[j * cols + i * n + j] = 1.0;
    b[j] = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[(n + i) * cols + i * n + j] = q[j];
      a[(2 * n + i) * cols + i * n + j] = s[j];
    }
    b[n + i] = p[i];
    b[2 * n + i] = s[i];
  }

  const auto result = detail::phase_one(std::move(a), rows, cols, std::move(b));
  return result.infeasibility <= 1e-8;
}

}  // namespace majorkit
