#include "selfind/inductance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "selfind/error.hpp"
#include "selfind/fit.hpp"
#include "selfind/regularize.hpp"

namespace selfind {

namespace {

double weber_numerator(const PointTangent& a, const PointTangent& b, double& r) {
  const Vec3 d = b.point - a.point;
  r = norm(d);
  return dot(d, a.tangent) * dot(d, b.tangent) / (r * r);
}

}  // namespace

Kernel inductance_kernel(InductanceForm form, double alpha) {
  if (form == InductanceForm::neumann) {
    if (alpha == 1.0)
      return {[](const PointTangent& a, const PointTangent& b) {
                return dot(a.tangent, b.tangent) / distance(a.point, b.point);
              },
              true};
    return {[alpha](const PointTangent& a, const PointTangent& b) {
              return dot(a.tangent, b.tangent) * std::pow(distance(a.point, b.point), -alpha);
            },
            true};
  }
  if (alpha == 1.0)
    return {[](const PointTangent& a, const PointTangent& b) {
              double r;
              const double num = weber_numerator(a, b, r);
              return num / r;
            },
            true};
  return {[alpha](const PointTangent& a, const PointTangent& b) {
            double r;
            const double num = weber_numerator(a, b, r);
            return num * std::pow(r, -alpha);
          },
          true};
}

Kernel riesz_kernel(InductanceForm form, double z) { return inductance_kernel(form, -z); }

void require_disjoint(const ParametricLoop& a, const ParametricLoop& b) {
  if (a.same_as(b)) fail(ErrorCode::proximity, "mutual inductance of a curve with itself diverges");
  const double threshold = 1e-6 * std::max(a.length(), b.length());
  const ClosestPair cp = min_distance(a, b);
  if (!(cp.distance > threshold))
    fail(ErrorCode::proximity, "curves are not disjoint (minimal distance " + std::to_string(cp.distance) + ")");
}

double mutual_inductance(const ParametricLoop& a, const ParametricLoop& b, InductanceForm form, UnitSystem units,
                         const QuadratureSpec& spec) {
  require_disjoint(a, b);
  return prefactor(units) * integrate_pair(a, b, inductance_kernel(form), spec);
}

double power_alpha_energy(const ParametricLoop& a, const ParametricLoop& b, double alpha, InductanceForm form,
                          const QuadratureSpec& spec) {
  if (!std::isfinite(alpha)) fail(ErrorCode::invalid_argument, "alpha must be finite");
  require_disjoint(a, b);
  return integrate_pair(a, b, inductance_kernel(form, alpha), spec);
}

RegularizationResult power2_self_regularized(const ParametricLoop& loop, InductanceForm form,
                                             std::span<const double> eps, const QuadratureSpec& spec,
                                             UnitSystem units) {
  if (!loop.closed()) fail(ErrorCode::unsupported_curve, "power-2 regularization needs a closed loop");
  if (eps.size() < 4) fail(ErrorCode::fit, "power-2 regularization needs at least 4 schedule points");
  validate_schedule(eps, loop.length() / 10.0, "epsilon");
  const double len = loop.length();
  const std::vector<double> raw = integrate_self_strip(loop, inductance_kernel(form, 2.0), eps, spec);

  std::vector<double> x(eps.begin(), eps.end()), y(raw.size()), w(raw.size());
  const double emin = *std::min_element(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = raw[i] - 2.0 * len / x[i];
    w[i] = emin / x[i];
  }
  const double powers[] = {0, 1, 3};
  const LinearFit fit = weighted_least_squares(x, y, w, power_basis(powers));

  // Diagnostic free fit of the 1/eps coefficient.
  const double free_powers[] = {-1, 0, 1, 3};
  const LinearFit free_fit = weighted_least_squares(x, raw, w, power_basis(free_powers));

  const double pf = prefactor(units);
  RegularizationResult r;
  r.value = pf * fit.coefficients[0];
  r.method = Method::power2;
  r.form = form;
  r.units = units;
  r.schedule_kind = "epsilon";
  for (std::size_t i = 0; i < x.size(); ++i)
    r.schedule.push_back({x[i], pf * raw[i], pf * 2.0 * len / x[i], pf * y[i]});
  r.fit_coefficients = {{"c0", pf * fit.coefficients[0]},
                        {"c_inv", pf * 2.0 * len},
                        {"c1", pf * fit.coefficients[1]},
                        {"c3", pf * fit.coefficients[2]}};
  r.diagnostics = {{"free_c_inv", pf * free_fit.coefficients[0]},
                   {"free_c_inv_rel_error", std::abs(free_fit.coefficients[0] - 2.0 * len) / (2.0 * len)},
                   {"free_c0", pf * free_fit.coefficients[1]},
                   {"fit_rms", pf * fit.weighted_rms},
                   {"length", len}};
  r.error_estimate = pf * std::max(std::abs(free_fit.coefficients[1] - fit.coefficients[0]), fit.weighted_rms);
  return r;
}

}  // namespace selfind
