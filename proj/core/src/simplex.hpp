#pragma once

#include <vector>

namespace majorkit::detail {

struct PhaseOneResult {
  double infeasibility = 0.0;  // optimal sum of artificial variables
  std::vector<double> x;       // a basic solution of the structural variables
};

// Phase-one simplex for {x >= 0 : A x = b}. Dense tableau, Bland's rule.
// `a` is row-major with `rows` rows; rows with negative b are negated first.
PhaseOneResult phase_one(std::vector<double> a, std::size_t rows, std::size_t cols,
                         std::vector<double> b);

}  // namespace majorkit::detail
