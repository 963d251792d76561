#pragma once

#include <functional>
#include <span>
#include <vector>

namespace selfind {

struct LinearFit {
  std::vector<double> coefficients;
  std::vector<double> residuals;  // y - model, unweighted
  double weighted_rms = 0.0;
};

using FitBasis = std::vector<std::function<double(double)>>;

// Weighted least squares y ~ sum_j c_j basis_j(x) by column-scaled QR.
// Throws ErrorCode::fit when there are fewer points than basis functions.
LinearFit weighted_least_squares(std::span<const double> x, std::span<const double> y,
                                 std::span<const double> w, const FitBasis& basis);

// Basis x^p for each listed power.
FitBasis power_basis(std::span<const double> powers);

}  // namespace selfind
