#include "selfind/solenoid.hpp"

#include <cmath>
#include <numbers>

#include "parallel.hpp"
#include "selfind/elliptic.hpp"
#include "selfind/error.hpp"
#include "selfind/regularize.hpp"

namespace selfind {

namespace {

constexpr double kPi = std::numbers::pi;

double mu0(UnitSystem units) { return 4.0 * kPi * prefactor(units); }

void check_dims(double r, double length) {
  if (!(r >= 0.0) || !(length >= 0.0) || !std::isfinite(r) || !std::isfinite(length))
    fail(ErrorCode::invalid_argument, "radius and length must be finite and non-negative");
}

}  // namespace

void SolenoidSpec::validate() const {
  if (!(radius > 0.0) || !(length > 0.0) || !(turns_per_length > 0.0))
    fail(ErrorCode::invalid_argument, "solenoid radius, length and winding density must be positive");
  const double turns_count = turns();
  if (std::abs(turns_count - std::round(turns_count)) > 1e-9 * std::max(1.0, turns_count) || std::round(turns_count) < 1)
    fail(ErrorCode::invalid_argument, "n * length must be a whole number of turns");
}

ParametricLoop helix_curve(const SolenoidSpec& spec) {
  spec.validate();
  return make_helix(spec.radius, spec.length, spec.turns_per_length);
}

double helix_length(const SolenoidSpec& spec) {
  const double w = 2.0 * kPi * spec.turns_per_length * spec.radius;
  return spec.length * std::sqrt(w * w + 1.0);
}

double closed_form_L(double r, double length, UnitSystem units) {
  check_dims(r, length);
  if (r == 0.0 || length == 0.0) return 0.0;
  const double l = length, m = -4.0 * r * r / (l * l);
  const double bracket =
      -r * r * r + (-l * (l * l - 4.0 * r * r) * elliptic_E(m) + l * (l * l + 4.0 * r * r) * elliptic_K(m)) / 8.0;
  return 8.0 * mu0(units) / 3.0 * bracket;
}

double cylinder_surface_oracle(double r, double length, UnitSystem units, const QuadratureSpec& spec) {
  check_dims(r, length);
  spec.validate();
  if (r == 0.0 || length == 0.0) return 0.0;
  const double a = length / r;
  const auto& gl = GaussLegendre::of(spec.panel_order);
  const double h = 1.0 / spec.panels_per_unit_arclength;

  // Inner: 2 int_0^a (a - u) / sqrt(c^2 + u^2) du, panels graded from u = 0
  // on the scale c.
  auto inner = [&](double theta) {
    const double c = 2.0 * std::sin(theta);
    double sum = 0.0;
    for (const Panel& p : graded_panels(0.0, a, std::min(c, h), 2.0, h))
      sum += gl.integrate([&](double u) { return (a - u) / std::sqrt(c * c + u * u); }, p.a, p.b);
    return 2.0 * sum;
  };
  // The theta integrand grows like log(1/theta); grade toward 0.
  const double top = 0.5 * kPi;
  std::vector<Panel> panels = graded_panels(0.0, top, std::ldexp(std::min(h, top), -60), 2.0, std::min(h, top));
  std::vector<double> parts(panels.size());
  detail::parallel_for(panels.size(), [&](std::size_t i) {
    parts[i] = gl.integrate(
        [&](double t) {
          const double s = std::sin(t);
          return (1.0 - 2.0 * s * s) * inner(t);
        },
        panels[i].a, panels[i].b);
  });
  double total = 0.0;
  for (double p : parts) total += p;
  return 2.0 * mu0(units) * r * r * r * total;
}

double asymptotic_L(double r, double length, UnitSystem units) {
  check_dims(r, length);
  return mu0(units) * (kPi * r * r * length - 8.0 * r * r * r / 3.0);
}

std::vector<ConvergenceRow> convergence_study(double r, double length, std::span<const double> n_list,
                                              InductanceForm form, const QuadratureSpec& spec, UnitSystem units) {
  if (n_list.empty()) fail(ErrorCode::invalid_argument, "empty list of winding densities");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (!(n_list[i] > n_list[i - 1])) fail(ErrorCode::invalid_argument, "winding densities must increase");
  const double limit = closed_form_L(r, length, units);
  std::vector<ConvergenceRow> rows;
  for (double n : n_list) {
    const SolenoidSpec s{r, length, n};
    const ParametricLoop helix = helix_curve(s);
    const auto result = hadamard_self(helix, form, default_epsilon_schedule(helix), spec, units);
    ConvergenceRow row;
    row.n = n;
    row.length = helix.length();
    row.value = result.value;
    row.per_n2 = result.value / (n * n);
    row.deviation = std::abs(row.per_n2 - limit);
    row.error_estimate = result.error_estimate / (n * n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace selfind
