#include "selfind/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "selfind/curve_spec.hpp"
#include "selfind/elliptic.hpp"
#include "selfind/fit.hpp"
#include "selfind/inductance.hpp"
#include "selfind/regularize.hpp"
#include "selfind/solenoid.hpp"

namespace selfind {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr auto N = InductanceForm::neumann;
constexpr auto W = InductanceForm::weber;

class Suite {
 public:
  void relative(const std::string& name, double value, double expected, double tol, double floor = 0.0) {
    const double err = std::abs(value - expected) / std::max(std::abs(expected), floor);
    add(name, value, expected, err, tol, "relative");
  }
  void absolute(const std::string& name, double value, double expected, double tol) {
    add(name, value, expected, std::abs(value - expected), tol, "absolute");
  }
  VerifyReport report() && { return {std::move(checks_)}; }

 private:
  void add(const std::string& name, double value, double expected, double err, double tol, const char* metric) {
    checks_.push_back({name, value, expected, err, tol, metric, err <= tol});
  }
  std::vector<VerifyCheck> checks_;
};

}  // namespace

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; }));
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["units"] = "reduced";
  auto& list = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name},
                    {"value", c.value},
                    {"expected", c.expected},
                    {"error", c.error},
                    {"metric", c.metric},
                    {"tolerance", c.tolerance},
                    {"passed", c.passed}});
  j["total"] = checks.size();
  j["failed"] = failures();
  j["all_passed"] = all_passed();
  return j;
}

VerifyReport run_verify(const std::string& curve_dir, const QuadratureSpec& spec) {
  auto load = [&](const char* name) { return load_curve_file(curve_dir + "/" + name); };
  const ParametricLoop circle = load("circle.json");
  const ParametricLoop ellipse = load("ellipse.json");
  const ParametricLoop trefoil = load("trefoil.json");
  const ParametricLoop helix = load("helix.json");
  const ParametricLoop lower = load("coaxial_lower.json");
  const ParametricLoop upper = load("coaxial_upper.json");

  Suite s;
  const double h_circle = 8.0 * kPi * (std::log(2.0) - 1.0);

  // Hadamard values, both forms, for every curve.
  struct Named {
    const char* name;
    const ParametricLoop* loop;
  };
  const Named curves[] = {{"circle", &circle}, {"ellipse", &ellipse}, {"trefoil", &trefoil}, {"helix", &helix}};
  std::vector<RegularizationResult> hn, hw;
  for (const auto& c : curves) {
    const auto eps = default_epsilon_schedule(*c.loop);
    hn.push_back(hadamard_self(*c.loop, N, eps, spec));
    hw.push_back(hadamard_self(*c.loop, W, eps, spec));
  }
  s.relative("hadamard_circle_neumann", hn[0].value, h_circle, 1e-5);
  s.relative("hadamard_circle_weber", hw[0].value, h_circle + 4.0 * kPi, 1e-5);

  // Weber - Neumann = 2L on closed loops; on an open arc the boundary term
  // adds -2D, D the end-to-end chord.
  for (std::size_t i = 0; i < 4; ++i) {
    const ParametricLoop& loop = *curves[i].loop;
    double expected = 2.0 * loop.length();
    std::string name = std::string("form_offset_") + curves[i].name;
    if (!loop.closed()) {
      expected -= 2.0 * distance(loop.point(0.0), loop.point(loop.length()));
      name += "_open_arc";
    }
    s.relative(name, hw[i].value - hn[i].value, expected, 1e-4);
  }

  // Counter-term coefficients on circle and ellipse.
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto* r : {&hn[i], &hw[i]}) {
      const std::string tag = std::string(curves[i].name) + "_" + to_string(r->form);
      s.absolute("free_log_coefficient_" + tag, r->diagnostic("c_log_rel_error"), 0.0, 1e-3);
      s.absolute("eps2_coefficient_" + tag, r->diagnostic("c2_rel_error"), 0.0, 1e-2);
    }
  }

  // Hadamard against analytic continuation.
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto* r : {&hn[i], &hw[i]}) {
      const auto c = continuation_self(*curves[i].loop, r->form, default_z_schedule(), spec);
      s.relative(std::string("continuation_") + curves[i].name + "_" + to_string(r->form), c.value, r->value, 1e-3, 1.0);
    }
  }

  // Residues from the local phi expansion.
  for (std::size_t i = 0; i < 2; ++i) {
    for (InductanceForm f : {N, W}) {
      const std::string tag = std::string(curves[i].name) + "_" + to_string(f);
      const auto res = residue_estimates(*curves[i].loop, f, {}, spec);
      s.absolute("phi0_" + tag, res.max_phi0_error, 0.0, 1e-6);
      s.relative("first_residue_" + tag, res.res1, res.res1_expected, 1e-3);
      s.relative("second_residue_" + tag, res.res3, res.res3_expected, 1e-2);
    }
  }

  // Parallel curves.
  const auto pl = parallel_limit(circle, default_delta_schedule(circle), spec);
  s.absolute("parallel_limit_circle", pl.value, h_circle + 2.0 * circle.length() * std::log(2.0), 1e-3);
  s.absolute("parallel_implied_H_circle", pl.diagnostic("implied_H"), hn[0].value, 1e-3);

  // Homothety.
  for (double lambda : {0.5, 2.0}) {
    const ParametricLoop scaled = circle.scaled(lambda);
    const auto r = hadamard_self(scaled, N, default_epsilon_schedule(scaled), spec);
    const double expected = lambda * hn[0].value + 2.0 * circle.length() * lambda * std::log(lambda);
    s.relative(lambda < 1 ? "homothety_circle_half" : "homothety_circle_double", r.value, expected, 1e-4);
  }

  // Power-2 energies.
  const auto eps_c = default_epsilon_schedule(circle);
  s.relative("power2_circle_neumann", power2_self_regularized(circle, N, eps_c, spec).value, -2.0 * kPi * kPi, 1e-4);
  s.relative("power2_circle_weber", power2_self_regularized(circle, W, eps_c, spec).value, -kPi * kPi, 1e-4);

  // Mutual inductance of the coaxial pair against Maxwell's formula.
  {
    const double d = std::abs(upper.point(0.0).z - lower.point(0.0).z);
    const double r1 = norm(lower.point(0.0)), r2 = std::hypot(upper.point(0.0).x, upper.point(0.0).y);
    const double k2 = 4.0 * r1 * r2 / ((r1 + r2) * (r1 + r2) + d * d), k = std::sqrt(k2);
    const double maxwell = 4.0 * kPi * std::sqrt(r1 * r2) * ((2.0 / k - k) * elliptic_K(k2) - 2.0 / k * elliptic_E(k2));
    const double mn = mutual_inductance(lower, upper, N, UnitSystem::reduced, spec);
    const double mw = mutual_inductance(lower, upper, W, UnitSystem::reduced, spec);
    s.relative("mutual_coaxial_maxwell", mn, maxwell, 1e-4);
    s.relative("mutual_coaxial_weber_equals_neumann", mw, mn, 1e-6);
  }

  // Solenoid limit: closed form against the cylinder integral.
  for (double r : {0.5, 1.0, 2.0})
    for (double l : {1.0, 2.0, 10.0}) {
      char name[64];
      std::snprintf(name, sizeof name, "solenoid_oracle_r%g_l%g", r, l);
      s.relative(name, closed_form_L(r, l), cylinder_surface_oracle(r, l, UnitSystem::reduced, spec), 1e-5);
    }
  {
    std::vector<double> ls = {10, 20, 40, 80}, logl, logres, ones(4, 1.0);
    for (double l : ls) {
      logl.push_back(std::log(l));
      logres.push_back(std::log(std::abs(closed_form_L(1.0, l) - asymptotic_L(1.0, l))));
    }
    const double powers[] = {0, 1};
    const auto fit = weighted_least_squares(logl, logres, ones, power_basis(powers));
    s.absolute("solenoid_asymptotic_slope", fit.coefficients[1], -1.0, 0.1);
  }
  {
    const double ns[] = {2, 4, 8};
    const auto rows = convergence_study(1.0, 2.0, ns, N, spec);
    double worst = 0.0;  // largest increase of the deviation along n
    for (std::size_t i = 1; i < rows.size(); ++i) worst = std::max(worst, rows[i].deviation - rows[i - 1].deviation);
    s.absolute("solenoid_deviation_increase", std::max(worst, 0.0), 0.0, 0.0);
  }
  return std::move(s).report();
}

}  // namespace selfind
