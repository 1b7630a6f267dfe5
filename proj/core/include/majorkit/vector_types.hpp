#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace majorkit {

// Finite real vector of length >= 1; the object compared by majorization.
class RealVec {
 public:
  RealVec() = default;
  explicit RealVec(std::vector<double> values);
  RealVec(std::initializer_list<double> values);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] const std::vector<double>& vector() const noexcept { return values_; }
  [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
  [[nodiscard]] auto end() const noexcept { return values_.end(); }

  [[nodiscard]] double sum() const noexcept;

  friend bool operator==(const RealVec&, const RealVec&) = default;

 private:
  std::vector<double> values_;
};

// Nonnegative vector summing to one within 1e-12.
class ProbVec {
 public:
  static constexpr double kSumTolerance = 1e-12;

  ProbVec() = default;
  explicit ProbVec(std::vector<double> values);
  ProbVec(std::initializer_list<double> values);

  static ProbVec uniform(std::size_t n);
  // Rescales a nonnegative vector with positive total onto the simplex.
  static ProbVec normalized(std::vector<double> weights);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] const std::vector<double>& vector() const noexcept { return values_; }
  [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
  [[nodiscard]] auto end() const noexcept { return values_.end(); }

  [[nodiscard]] RealVec as_real() const { return RealVec(values_); }

  friend bool operator==(const ProbVec&, const ProbVec&) = default;

 private:
  std::vector<double> values_;
};

// Dense row-major n x n matrix with finite entries.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0);
  SquareMatrix(std::size_t n, std::vector<double> row_major);
  SquareMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SquareMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * n_, n_);
  }
  [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

  [[nodiscard]] std::vector<double> apply(std::span<const double> x) const;
  [[nodiscard]] SquareMatrix operator*(const SquareMatrix& rhs) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// One Pigou-Dalton transfer: move `amount` from coordinate `donor` to
// coordinate `recipient`.
struct TransferStep {
  std::size_t donor = 0;
  std::size_t recipient = 0;
  double amount = 0.0;

  friend bool operator==(const TransferStep&, const TransferStep&) = default;
};

// Applies a step in place; throws InvalidArgument when the step would reverse
// the order of the two coordinates or is otherwise malformed.
void apply_transfer(std::vector<double>& x, const TransferStep& step);

}  // namespace majorkit
