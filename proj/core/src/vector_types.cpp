#include "majorkit/vector_types.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "majorkit/errors.hpp"

namespace majorkit {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  if (values.empty()) throw InvalidArgument(std::string(what) + ": length must be >= 1");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw InvalidArgument(std::string(what) + ": entry " + std::to_string(i) + " is not finite");
  }
}

}  // namespace

RealVec::RealVec(std::vector<double> values) : values_(std::move(values)) {
  require_finite(values_, "RealVec");
}

RealVec::RealVec(std::initializer_list<double> values) : RealVec(std::vector<double>(values)) {}

double RealVec::sum() const noexcept { return std::accumulate(values_.begin(), values_.end(), 0.0); }

ProbVec::ProbVec(std::vector<double> values) : values_(std::move(values)) {
  require_finite(values_, "ProbVec");
  double total = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0.0)
      throw InvalidArgument("ProbVec: entry " + std::to_string(i) + " is negative");
    total += values_[i];
  }
  if (std::abs(total - 1.0) > kSumTolerance)
    throw InvalidArgument("ProbVec: entries sum to " + std::to_string(total) + ", not 1");
}

ProbVec::ProbVec(std::initializer_list<double> values) : ProbVec(std::vector<double>(values)) {}

ProbVec ProbVec::uniform(std::size_t n) {
  if (n == 0) throw InvalidArgument("ProbVec: length must be >= 1");
  return ProbVec(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbVec ProbVec::normalized(std::vector<double> weights) {
  require_finite(weights, "ProbVec::normalized");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw InvalidArgument("ProbVec::normalized: negative weight");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidArgument("ProbVec::normalized: weights sum to zero");
  for (double& w : weights) w /= total;
  return ProbVec(std::move(weights));
}

SquareMatrix::SquareMatrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {
  if (!std::isfinite(fill)) throw InvalidArgument("SquareMatrix: fill value is not finite");
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n_ * n_) throw InvalidArgument("SquareMatrix: expected n*n entries");
  for (double v : data_)
    if (!std::isfinite(v)) throw InvalidArgument("SquareMatrix: entry is not finite");
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InvalidArgument("SquareMatrix: rows must have length n");
    for (double v : r) {
      if (!std::isfinite(v)) throw InvalidArgument("SquareMatrix: entry is not finite");
      data_.push_back(v);
    }
  }
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> SquareMatrix::apply(std::span<const double> x) const {
  if (x.size() != n_) throw InvalidArgument("SquareMatrix::apply: dimension mismatch");
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += data_[i * n_ + j] * x[j];
    out[i] = acc;
  }
  return out;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
  if (rhs.n_ != n_) throw InvalidArgument("SquareMatrix: dimension mismatch");
  SquareMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const double a = data_[i * n_ + k];
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) out.data_[i * n_ + j] += a * rhs.data_[k * n_ + j];
    }
  return out;
}

void apply_transfer(std::vector<double>& x, const TransferStep& step) {
  if (step.donor >= x.size() || step.recipient >= x.size() || step.donor == step.recipient)
    throw InvalidArgument("TransferStep: invalid donor/recipient indices");
  if (!(step.amount > 0.0)) throw InvalidArgument("TransferStep: amount must be positive");
  const double gap = x[step.donor] - x[step.recipient];
  const double slack = 1e-12 * std::max(1.0, std::abs(x[step.donor]) + std::abs(x[step.recipient]));
  if (step.amount > gap / 2.0 + slack)
    throw InvalidArgument("TransferStep: amount would reverse the order of the two coordinates");
  x[step.donor] -= step.amount;
  x[step.recipient] += step.amount;
}

}  // namespace majorkit
