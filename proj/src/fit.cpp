#include "selfind/fit.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "selfind/error.hpp"

namespace selfind {

LinearFit weighted_least_squares(std::span<const double> x, std::span<const double> y,
                                 std::span<const double> w, const FitBasis& basis) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto p = static_cast<Eigen::Index>(basis.size());
  if (y.size() != x.size() || w.size() != x.size()) fail(ErrorCode::invalid_argument, "fit inputs differ in length");
  if (n < p) fail(ErrorCode::fit, "fewer samples than fit parameters");
  Eigen::MatrixXd a(n, p);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sw = std::sqrt(w[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < p; ++j)
      a(i, j) = sw * basis[static_cast<std::size_t>(j)](x[static_cast<std::size_t>(i)]);
    b(i) = sw * y[static_cast<std::size_t>(i)];
  }
  // Column scaling keeps powers of small x from wrecking the conditioning.
  Eigen::VectorXd scale(p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const double nrm = a.col(j).norm();
    scale(j) = nrm > 0.0 ? nrm : 1.0;
    a.col(j) /= scale(j);
  }
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
  LinearFit out;
  out.coefficients.resize(static_cast<std::size_t>(p));
  for (Eigen::Index j = 0; j < p; ++j) out.coefficients[static_cast<std::size_t>(j)] = c(j) / scale(j);
  double wsum = 0.0, acc = 0.0;
  out.residuals.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double model = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) model += out.coefficients[j] * basis[j](x[i]);
    out.residuals[i] = y[i] - model;
    acc += w[i] * out.residuals[i] * out.residuals[i];
    wsum += w[i];
  }
  out.weighted_rms = wsum > 0.0 ? std::sqrt(acc / wsum) : 0.0;
  for (double cj : out.coefficients)
    if (!std::isfinite(cj)) fail(ErrorCode::fit, "singular fit");
  return out;
}

FitBasis power_basis(std::span<const double> powers) {
  FitBasis out;
  for (double p : powers) {
    if (p == 0.0)
      out.emplace_back([](double) { return 1.0; });
    else
      out.emplace_back([p](double x) { return std::pow(x, p); });
  }
  return out;
}

}  // namespace selfind
