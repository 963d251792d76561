#include "selfind/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "parallel.hpp"
#include "selfind/error.hpp"
#include "selfind/fit.hpp"
#include "selfind/inductance.hpp"

namespace selfind {

namespace {

constexpr double kPi = std::numbers::pi;

double min_radius_of_curvature(const ParametricLoop& loop) {
  const CurvatureRange kr = curvature_range(loop);
  return kr.max > 0.0 ? 1.0 / kr.max : loop.length();
}

double numerator(const PointTangent& a, const PointTangent& b, InductanceForm form) {
  if (form == InductanceForm::neumann) return dot(a.tangent, b.tangent);
  const Vec3 d = b.point - a.point;
  const double r2 = dot(d, d);
  if (r2 == 0.0) return dot(a.tangent, b.tangent);
  return dot(d, a.tangent) * dot(d, b.tangent) / r2;
}

std::vector<double> descending(std::span<const double> v) { return {v.begin(), v.end()}; }

// Arc length past s1 (direction dir) at which the chord first reaches t.
double ball_crossing(const ParametricLoop& loop, double s1, double t, double kappa, int dir) {
  const Vec3 x1 = loop.point(s1);
  const double len = loop.length();
  const double reach = loop.closed() ? 0.5 * len : (dir > 0 ? len - s1 : s1);
  auto excess = [&](double arc) { return distance(x1, loop.point(s1 + dir * arc)) - t; };
  double lo = t;  // chord <= arc, so excess(lo) <= 0
  double hi = 1.5 * t * (1.0 + kappa * kappa * t * t / 24.0);
  while (excess(hi) < 0.0) {
    hi *= 1.5;
    if (hi > reach) fail(ErrorCode::locality, "chord ball reaches a distant part of the curve or an endpoint");
  }
  if (hi > reach) fail(ErrorCode::locality, "chord ball reaches an endpoint of the curve");
  for (int i = 0; i < 200 && hi - lo > 4e-16 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double psi_unchecked(const ParametricLoop& loop, double s1, double t, InductanceForm form, double kappa) {
  const double up = ball_crossing(loop, s1, t, kappa, +1);
  const double down = ball_crossing(loop, s1, t, kappa, -1);
  const PointTangent x1 = loop.point_tangent(s1);
  const auto& gl = GaussLegendre::of(24);
  auto f = [&](double s2) { return numerator(x1, loop.point_tangent(s2), form); };
  return gl.integrate(f, s1 - down, s1) + gl.integrate(f, s1, s1 + up);
}

double phi_unchecked(const ParametricLoop& loop, double s1, double t, InductanceForm form, double kappa) {
  const double h = 1e-2 * t;
  auto psi = [&](double x) { return psi_unchecked(loop, s1, x, form, kappa); };
  return (8.0 * (psi(t + h) - psi(t - h)) - (psi(t + 2 * h) - psi(t - 2 * h))) / (12.0 * h);
}

void check_ball_radius(const ParametricLoop& loop, double t) {
  if (!(t > 0.0)) fail(ErrorCode::invalid_argument, "chord radius must be positive");
  if (!(1.05 * t < self_separation_scale(loop)))
    fail(ErrorCode::locality, "chord radius exceeds the curve's self-separation scale");
}

}  // namespace

void validate_schedule(std::span<const double> values, double upper, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!(v > 0.0) || !std::isfinite(v))
      fail(ErrorCode::invalid_argument, std::string(what) + " schedule values must be positive and finite");
    if (!(v < upper))
      fail(ErrorCode::domain, std::string(what) + " schedule value " + std::to_string(v) + " is too large");
    if (i > 0 && !(v < values[i - 1]))
      fail(ErrorCode::invalid_argument, std::string(what) + " schedule must be strictly decreasing");
  }
}

std::vector<double> default_epsilon_schedule(const ParametricLoop& loop) {
  const double len = loop.length();
  double base = std::min(len / 20.0, kPi * min_radius_of_curvature(loop) / 10.0);
  base = std::min(base, self_separation_scale(loop));
  std::vector<double> out;
  for (int k = 0; k <= 5; ++k) out.push_back(std::ldexp(base, -k));
  return out;
}

std::vector<double> default_z_schedule() {
  std::vector<double> out;
  for (int k = 1; k <= 6; ++k) out.push_back(-1.0 + std::ldexp(1.0, -k));
  return out;
}

std::vector<double> default_delta_schedule(const ParametricLoop& loop) {
  const double rho = min_radius_of_curvature(loop);
  std::vector<double> out;
  for (int k = 0; k <= 5; ++k) out.push_back(std::ldexp(rho, -k) / 64.0);
  return out;
}

RegularizationResult hadamard_self(const ParametricLoop& loop, InductanceForm form, std::span<const double> eps,
                                   const QuadratureSpec& spec, UnitSystem units) {
  if (eps.size() < 4) fail(ErrorCode::fit, "Hadamard extraction needs at least 4 schedule points");
  const double len = loop.length();
  validate_schedule(eps, len / 10.0, "epsilon");
  const bool closed = loop.closed();
  const std::vector<double> raw = integrate_self_strip(loop, inductance_kernel(form), eps, spec);

  const std::vector<double> x = descending(eps);
  const double emin = x.back();
  std::vector<double> y(x.size()), w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = raw[i] - 2.0 * len * std::log(1.0 / x[i]);
    w[i] = emin / x[i];
  }
  const std::vector<double> pinned_powers = closed ? std::vector<double>{0, 2, 4} : std::vector<double>{0, 1, 2, 3};
  const LinearFit fit = weighted_least_squares(x, y, w, power_basis(pinned_powers));

  FitBasis free_basis = {[](double) { return 1.0; }, [](double e) { return std::log(1.0 / e); }};
  std::vector<double> rest = closed ? std::vector<double>{2, 4} : std::vector<double>{1, 2, 3};
  if (x.size() < rest.size() + 2) rest.pop_back();
  for (double p : rest) free_basis.emplace_back([p](double e) { return std::pow(e, p); });
  const LinearFit free_fit = weighted_least_squares(x, raw, w, free_basis);
  const double free_log = free_fit.coefficients[1];
  const double log_err = std::abs(free_log - 2.0 * len) / (2.0 * len);

  const double pf = prefactor(units);
  RegularizationResult r;
  r.value = pf * fit.coefficients[0];
  r.method = Method::hadamard;
  r.form = form;
  r.units = units;
  r.schedule_kind = "epsilon";
  for (std::size_t i = 0; i < x.size(); ++i)
    r.schedule.push_back({x[i], pf * raw[i], pf * 2.0 * len * std::log(1.0 / x[i]), pf * y[i]});
  r.fit_coefficients = {{"c0", pf * fit.coefficients[0]}, {"c_log", pf * 2.0 * len}};
  for (std::size_t j = 1; j < pinned_powers.size(); ++j)
    r.fit_coefficients.push_back({"c" + std::to_string(static_cast<int>(pinned_powers[j])), pf * fit.coefficients[j]});

  r.diagnostics = {{"length", len},
                   {"free_c_log", pf * free_log},
                   {"c_log_rel_error", log_err},
                   {"free_c0", pf * free_fit.coefficients[0]},
                   {"fit_rms", pf * fit.weighted_rms}};
  if (closed) {
    const double k2 = curvature_sq_integral(loop);
    const double theory = (form == InductanceForm::neumann ? 11.0 : 5.0) / 24.0 * k2;
    const double c2 = fit.coefficients[1];
    r.diagnostics.push_back({"kappa_sq_integral", k2});
    r.diagnostics.push_back({"c2_theory", pf * theory});
    r.diagnostics.push_back({"c2_rel_error", theory != 0.0 ? std::abs(c2 - theory) / std::abs(theory) : std::abs(c2)});
  }
  r.error_estimate = pf * std::max(std::abs(free_fit.coefficients[0] - fit.coefficients[0]), fit.weighted_rms);
  if (log_err > 1e-2)
    fail(ErrorCode::counter_term_mismatch, "free-fit log coefficient " + std::to_string(free_log) +
                                               " deviates from 2L = " + std::to_string(2.0 * len) + " by more than 1%");
  return r;
}

ZEnergySample z_energy(const ParametricLoop& loop, InductanceForm form, double z, const QuadratureSpec& spec,
                       UnitSystem units) {
  if (!(z > -1.0) || !std::isfinite(z)) fail(ErrorCode::domain, "F(z) is a direct integral only for z > -1");
  return {z, prefactor(units) * integrate_self_power_singular(loop, riesz_kernel(form, z), z, spec)};
}

RegularizationResult continuation_self(const ParametricLoop& loop, InductanceForm form,
                                       std::span<const double> z_schedule, const QuadratureSpec& spec,
                                       UnitSystem units) {
  const std::size_t n = z_schedule.size();
  if (n < 4) fail(ErrorCode::fit, "continuation needs at least 4 schedule points");
  for (std::size_t i = 0; i < n; ++i) {
    const double z = z_schedule[i];
    if (!(z > -1.0) || !(z <= -0.5)) fail(ErrorCode::domain, "z schedule must lie in (-1, -0.5]");
    if (i > 0 && !(z < z_schedule[i - 1])) fail(ErrorCode::invalid_argument, "z schedule must approach -1 monotonically");
  }
  const double len = loop.length();
  std::vector<double> w1(n), f(n), g(n), ones(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = z_schedule[i];
    w1[i] = z + 1.0;
    f[i] = integrate_self_power_singular(loop, riesz_kernel(form, z), z, spec);
    g[i] = f[i] - 2.0 * len / w1[i];
  }
  auto extrapolate = [&](std::size_t degree) {
    std::vector<double> powers;
    for (std::size_t d = 0; d <= degree; ++d) powers.push_back(static_cast<double>(d));
    return weighted_least_squares(w1, g, ones, power_basis(powers));
  };
  const LinearFit fit = extrapolate(n - 2);
  const LinearFit lower = extrapolate(n - 3);
  const double value = fit.coefficients[0];
  const double spread = std::abs(value - lower.coefficients[0]);
  const double gscale = std::max(1.0, std::abs(value));
  if (!(fit.weighted_rms <= 1e-6 * gscale) || !(spread <= 1e-2 * gscale))
    fail(ErrorCode::extrapolation, "z extrapolation is unstable (residual " + std::to_string(fit.weighted_rms) +
                                       ", degree spread " + std::to_string(spread) + ")");

  const double pf = prefactor(units);
  RegularizationResult r;
  r.value = pf * value;
  r.method = Method::continuation;
  r.form = form;
  r.units = units;
  r.schedule_kind = "z";
  for (std::size_t i = 0; i < n; ++i) r.schedule.push_back({z_schedule[i], pf * f[i], pf * 2.0 * len / w1[i], pf * g[i]});
  for (std::size_t d = 0; d < fit.coefficients.size(); ++d)
    r.fit_coefficients.push_back({"g" + std::to_string(d), pf * fit.coefficients[d]});
  r.diagnostics = {{"length", len},
                   {"residue", pf * 2.0 * len},
                   {"fit_rms", pf * fit.weighted_rms},
                   {"lower_degree_value", pf * lower.coefficients[0]}};
  r.error_estimate = pf * std::max(spread, fit.weighted_rms);
  return r;
}

double psi_local(const ParametricLoop& loop, double s1, double t, InductanceForm form) {
  check_ball_radius(loop, t);
  return psi_unchecked(loop, s1, t, form, loop.frenet(s1).curvature);
}

double phi_local(const ParametricLoop& loop, double s1, double t, InductanceForm form) {
  check_ball_radius(loop, 1.02 * t);
  return phi_unchecked(loop, s1, t, form, loop.frenet(s1).curvature);
}

ResidueEstimates residue_estimates(const ParametricLoop& loop, InductanceForm form, const ResidueFitRange& range,
                                   const QuadratureSpec& spec, UnitSystem units) {
  if (!loop.closed()) fail(ErrorCode::unsupported_curve, "residues are defined for closed loops");
  if (range.samples < 5 || !(range.t_min > 0.0) || !(range.t_max > range.t_min))
    fail(ErrorCode::invalid_argument, "residue fit range needs 0 < t_min < t_max and at least 5 samples");
  spec.validate();
  const double rho = min_radius_of_curvature(loop);
  const double tmax = range.t_max * rho;
  if (!(1.05 * tmax < self_separation_scale(loop)))
    fail(ErrorCode::locality, "residue fit range exceeds the curve's self-separation scale");

  std::vector<double> ts(static_cast<std::size_t>(range.samples));
  for (int i = 0; i < range.samples; ++i)
    ts[static_cast<std::size_t>(i)] = rho * (range.t_min + (range.t_max - range.t_min) * i / (range.samples - 1));

  const double len = loop.length();
  const auto& gl = GaussLegendre::of(spec.panel_order);
  const std::vector<Panel> panels = uniform_panels(0.0, len, len / 8.0);
  struct Base {
    double s, w;
  };
  std::vector<Base> bases;
  for (const Panel& p : panels) {
    const double half = 0.5 * (p.b - p.a), mid = 0.5 * (p.a + p.b);
    for (int i = 0; i < gl.order(); ++i)
      bases.push_back({mid + half * gl.nodes()[static_cast<std::size_t>(i)], half * gl.weights()[static_cast<std::size_t>(i)]});
  }

  const double coef = form == InductanceForm::neumann ? 0.75 : 0.25;
  std::vector<PhiExpansion> points(bases.size());
  std::vector<double> rms(bases.size());
  const double powers[] = {0, 2, 3, 4, 5, 6};
  const FitBasis basis = power_basis(powers);
  detail::parallel_for(bases.size(), [&](std::size_t i) {
    const double kappa = loop.frenet(bases[i].s).curvature;
    std::vector<double> phi(ts.size()), ones(ts.size(), 1.0);
    for (std::size_t k = 0; k < ts.size(); ++k) phi[k] = phi_unchecked(loop, bases[i].s, ts[k], form, kappa);
    const LinearFit fit = weighted_least_squares(ts, phi, ones, basis);
    points[i] = {bases[i].s, kappa, fit.coefficients[0], fit.coefficients[1], -coef * kappa * kappa};
    rms[i] = fit.weighted_rms;
  });
  if (*std::max_element(rms.begin(), rms.end()) > 1e-8)
    fail(ErrorCode::fit, "phi expansion does not fit the requested t range");

  const double pf = prefactor(units);
  ResidueEstimates out;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    out.res1 += bases[i].w * points[i].a;
    out.res3 += bases[i].w * points[i].b;
    out.max_phi0_error = std::max(out.max_phi0_error, std::abs(points[i].a - 2.0));
  }
  out.res1 *= pf;
  out.res3 *= pf;
  out.res1_expected = pf * 2.0 * len;
  out.res3_expected = -pf * coef * curvature_sq_integral(loop);
  out.points = std::move(points);
  return out;
}

RegularizationResult parallel_limit(const ParametricLoop& loop, std::span<const double> delta,
                                    const QuadratureSpec& spec, UnitSystem units, InductanceForm form) {
  if (!loop.closed()) fail(ErrorCode::unsupported_curve, "the parallel limit needs a closed loop");
  if (delta.size() < 4) fail(ErrorCode::fit, "parallel limit needs at least 4 schedule points");
  validate_schedule(delta, loop.length(), "delta");
  const double len = loop.length();
  const std::vector<double> x = descending(delta);
  std::vector<double> raw(x.size()), y(x.size()), w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const ParametricLoop off = offset_curve(loop, x[i]);
    require_disjoint(loop, off);
    raw[i] = integrate_pair(loop, off, inductance_kernel(form), spec);
    y[i] = raw[i] + 2.0 * len * std::log(x[i]);
    w[i] = x.back() / x[i];
  }
  const FitBasis basis = {[](double) { return 1.0; }, [](double d) { return d; },
                          [](double d) { return d * std::log(d); }};
  const LinearFit fit = weighted_least_squares(x, y, w, basis);
  const FitBasis linear = {[](double) { return 1.0; }, [](double d) { return d; }};
  const LinearFit lin = weighted_least_squares(x, y, w, linear);

  const double pf = prefactor(units);
  const double shift = 2.0 * len * std::numbers::ln2;
  RegularizationResult r;
  r.value = pf * fit.coefficients[0];
  r.method = Method::parallel_limit;
  r.form = form;
  r.units = units;
  r.schedule_kind = "delta";
  for (std::size_t i = 0; i < x.size(); ++i) r.schedule.push_back({x[i], pf * raw[i], -pf * 2.0 * len * std::log(x[i]), pf * y[i]});
  r.fit_coefficients = {{"c0", pf * fit.coefficients[0]}, {"c1", pf * fit.coefficients[1]},
                        {"c_dlogd", pf * fit.coefficients[2]}};
  r.diagnostics = {{"length", len},
                   {"implied_H", pf * (fit.coefficients[0] - shift)},
                   {"log2_shift", pf * shift},
                   {"linear_model_c0", pf * lin.coefficients[0]},
                   {"fit_rms", pf * fit.weighted_rms}};
  r.error_estimate = pf * std::max(fit.weighted_rms, std::abs(fit.coefficients[0] - lin.coefficients[0]) * 1e-2);
  return r;
}

}  // namespace selfind
