#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "selfind/curve.hpp"
#include "selfind/error.hpp"
#include "selfind/regularize.hpp"

using namespace selfind;
using oracle::pi;

namespace {

const InductanceForm N = InductanceForm::neumann;
const InductanceForm W = InductanceForm::weber;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::io;
}

double unit_circle_H() { return 8.0 * pi * (std::log(2.0) - 1.0); }

RegularizationResult hadamard_default(const ParametricLoop& c, InductanceForm f) {
  return hadamard_self(c, f, default_epsilon_schedule(c));
}

}  // namespace

TEST_CASE("unit circle finite part from the antiderivative oracle") {
  // Independent extraction: fit the exact strip integral plus 4pi log(eps).
  std::vector<double> eps, y;
  for (double e = 0.2; e > 0.003; e /= 2) {
    eps.push_back(e);
    y.push_back(oracle::circle_neumann_strip(e) + 4.0 * pi * std::log(e));
  }
  const auto c = oracle::power_fit(eps, y, {0, 2, 4, 6});
  CHECK(c[0] == doctest::Approx(unit_circle_H()).epsilon(1e-10));

  const ParametricLoop circle = make_circle(1.0);
  const auto n = hadamard_default(circle, N);
  CHECK(n.value == doctest::Approx(c[0]).epsilon(1e-8));
  CHECK(n.method == Method::hadamard);
  CHECK(n.error_estimate < 1e-6);
  const auto w = hadamard_default(circle, W);
  CHECK(w.value == doctest::Approx(unit_circle_H() + 4.0 * pi).epsilon(1e-8));
}

TEST_CASE("counter-term coefficients follow the curvature expansion") {
  for (const ParametricLoop& c : {make_circle(1.0), make_ellipse(2.0, 1.0)}) {
    const double L = c.length(), k2 = curvature_sq_integral(c);
    for (auto [form, ratio] : {std::pair{N, 11.0 / 24.0}, std::pair{W, 5.0 / 24.0}}) {
      const auto r = hadamard_default(c, form);
      CHECK(r.diagnostic("free_c_log") == doctest::Approx(2.0 * L).epsilon(1e-3));
      CHECK(r.coefficient("c_log") == doctest::Approx(2.0 * L).epsilon(1e-14));
      CHECK(r.coefficient("c2") == doctest::Approx(ratio * k2).epsilon(1e-2));
    }
  }
}

TEST_CASE("Weber minus Neumann is twice the length on closed curves") {
  for (const ParametricLoop& c : {make_circle(1.0), make_ellipse(2.0, 1.0), make_circle(0.3)}) {
    const double diff = hadamard_default(c, W).value - hadamard_default(c, N).value;
    CHECK(diff == doctest::Approx(2.0 * c.length()).epsilon(1e-6));
  }
}

TEST_CASE("open arcs pick up an endpoint correction of twice the end-to-end distance") {
  const ParametricLoop helix = make_helix(0.5, 1.0, 2.0);
  const double diff = hadamard_default(helix, W).value - hadamard_default(helix, N).value;
  const double chord = chord_length(helix, 0.0, helix.length());
  CHECK(chord == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(diff == doctest::Approx(2.0 * helix.length() - 2.0 * chord).epsilon(1e-6));

  // Straight segment: 2 int_eps^L (L - u)/u du = 2L log(1/eps) + 2L(log L - 1) + 2 eps,
  // and both numerators equal one.
  const double len = 1.5;
  const ParametricLoop seg = make_segment(len);
  CHECK(hadamard_default(seg, N).value == doctest::Approx(2.0 * len * (std::log(len) - 1.0)).epsilon(1e-8));
  CHECK(hadamard_default(seg, W).value == doctest::Approx(2.0 * len * (std::log(len) - 1.0)).epsilon(1e-8));
}

TEST_CASE("homothety picks up a log term") {
  const ParametricLoop e = make_ellipse(2.0, 1.0);
  const double h = hadamard_default(e, N).value, L = e.length();
  for (double lam : {0.5, 2.0}) {
    CAPTURE(lam);
    const double scaled = hadamard_default(e.scaled(lam), N).value;
    CHECK(scaled == doctest::Approx(lam * (h + 2.0 * L * std::log(lam))).epsilon(1e-7));
  }
}

TEST_CASE("rigid motions and reversal leave the finite part unchanged") {
  const ParametricLoop e = make_ellipse(2.0, 1.0);
  Transform t;
  t.rotation = Mat3::rotation({1, 2, 3}, 0.9);
  t.translation = {4, -1, 2};
  const double h = hadamard_default(e, W).value;
  CHECK(hadamard_default(e.transformed(t), W).value == doctest::Approx(h).epsilon(1e-9));
  CHECK(hadamard_default(e.reversed(), W).value == doctest::Approx(h).epsilon(1e-9));
}

TEST_CASE("Hadamard schedule validation") {
  const ParametricLoop c = make_circle(1.0);
  const std::vector<double> rising = {0.01, 0.02, 0.04, 0.08};
  const std::vector<double> short_list = {0.1, 0.05, 0.025};
  const std::vector<double> too_wide = {1.0, 0.5, 0.25, 0.125};
  const std::vector<double> with_zero = {0.1, 0.05, 0.025, 0.0};
  CHECK(code_of([&] { hadamard_self(c, N, rising); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { hadamard_self(c, N, short_list); }) == ErrorCode::fit);
  CHECK(code_of([&] { hadamard_self(c, N, too_wide); }) == ErrorCode::domain);
  CHECK(code_of([&] { hadamard_self(c, N, with_zero); }) == ErrorCode::invalid_argument);
}

TEST_CASE("default schedules are decreasing and local") {
  const ParametricLoop e = make_ellipse(2.0, 1.0);
  for (const auto& s : {default_epsilon_schedule(e), default_delta_schedule(e)}) {
    REQUIRE(s.size() == 6);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] == doctest::Approx(0.5 * s[i - 1]).epsilon(1e-14));
    CHECK(s.front() < e.length() / 10.0);
  }
  const auto z = default_z_schedule();
  REQUIRE(z.size() == 6);
  CHECK(z.front() == -0.5);
  CHECK(z.back() == doctest::Approx(-1.0 + 1.0 / 64.0));
}

TEST_CASE("F(z) on the unit circle against tanh-sinh quadrature") {
  // F(z) = 4 pi int_0^pi numerator (2 sin(theta/2))^z dtheta, numerator cos(theta)
  // (Neumann) or cos^2(theta/2) (Weber); folded so the only singularity sits at 0.
  boost::math::quadrature::tanh_sinh<double> ts;
  const ParametricLoop c = make_circle(1.0);
  for (double z : {-0.5, -0.75, -0.9}) {
    CAPTURE(z);
    const double fn = 4.0 * pi * ts.integrate([z](double th) { return std::cos(th) * std::pow(2.0 * std::sin(th / 2.0), z); }, 0.0, pi);
    const double fw = 4.0 * pi * ts.integrate([z](double th) {
      const double c2 = std::cos(th / 2.0);
      return c2 * c2 * std::pow(2.0 * std::sin(th / 2.0), z);
    }, 0.0, pi);
    CHECK(z_energy(c, N, z).value == doctest::Approx(fn).epsilon(1e-9));
    CHECK(z_energy(c, W, z).value == doctest::Approx(fw).epsilon(1e-9));
  }
  CHECK(code_of([&] { z_energy(c, N, -1.0); }) == ErrorCode::domain);
}

TEST_CASE("analytic continuation agrees with the Hadamard finite part") {
  const ParametricLoop c = make_circle(1.0);
  for (InductanceForm f : {N, W}) {
    const auto cont = continuation_self(c, f, default_z_schedule());
    CHECK(cont.method == Method::continuation);
    CHECK(cont.value == doctest::Approx(hadamard_default(c, f).value).epsilon(1e-6));
    CHECK(cont.diagnostic("residue") == doctest::Approx(2.0 * c.length()).epsilon(1e-12));
  }
  const std::vector<double> bad = {-0.5, -0.75, -1.0, -1.1};
  CHECK(code_of([&] { continuation_self(c, N, bad); }) == ErrorCode::domain);
  const std::vector<double> unordered = {-0.75, -0.5, -0.875, -0.9375};
  CHECK(code_of([&] { continuation_self(c, N, unordered); }) == ErrorCode::invalid_argument);
}

TEST_CASE("phi on the unit circle matches its closed form") {
  // psi(t) = 2 sin(sigma), 2 sin(sigma/2) = t, so phi = 2 cos(sigma) / sqrt(1 - t^2/4).
  const ParametricLoop c = make_circle(1.0);
  for (double t : {0.05, 0.1, 0.2, 0.3}) {
    CAPTURE(t);
    const double sigma = 2.0 * std::asin(t / 2.0);
    const double expected = 2.0 * std::cos(sigma) / std::sqrt(1.0 - t * t / 4.0);
    CHECK(phi_local(c, 1.3, t, N) == doctest::Approx(expected).epsilon(1e-8));
    CHECK(psi_local(c, 1.3, t, N) == doctest::Approx(2.0 * std::sin(sigma)).epsilon(1e-10));
  }
  CHECK(phi_local(c, 0.0, 0.2, N) == doctest::Approx(1.97).epsilon(1e-3));
}

TEST_CASE("phi on a straight segment is identically two") {
  const ParametricLoop seg = make_segment(2.0);
  for (double t : {0.01, 0.1, 0.5})
    for (InductanceForm f : {N, W}) CHECK(phi_local(seg, 1.0, t, f) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(code_of([&] { phi_local(seg, 1.0, 1.5, N); }) == ErrorCode::locality);
  CHECK(code_of([&] { phi_local(make_circle(1.0), 0.0, 1.9, N); }) == ErrorCode::locality);
  CHECK(code_of([&] { phi_local(seg, 1.0, 0.0, N); }) == ErrorCode::invalid_argument);
}

TEST_CASE("residues of the continued energy") {
  const ParametricLoop c = make_circle(1.0);
  const auto n = residue_estimates(c, N);
  CHECK(n.max_phi0_error < 1e-6);
  CHECK(n.res1 == doctest::Approx(4.0 * pi).epsilon(1e-6));
  CHECK(n.res3 == doctest::Approx(-1.5 * pi).epsilon(1e-4));
  const auto w = residue_estimates(c, W);
  CHECK(w.res3 == doctest::Approx(-0.5 * pi).epsilon(1e-4));

  const ParametricLoop e = make_ellipse(2.0, 1.0);
  const auto ne = residue_estimates(e, N);
  CHECK(ne.res1 == doctest::Approx(ne.res1_expected).epsilon(1e-6));
  CHECK(ne.res3 == doctest::Approx(-0.75 * curvature_sq_integral(e)).epsilon(1e-3));
  for (const auto& p : ne.points) CHECK(p.b == doctest::Approx(p.b_expected).epsilon(1e-2));

  CHECK(code_of([&] { residue_estimates(make_segment(1.0), N); }) == ErrorCode::unsupported_curve);
  ResidueFitRange wide;
  wide.t_max = 5.0;
  CHECK(code_of([&] { residue_estimates(c, N, wide); }) == ErrorCode::locality);
}

TEST_CASE("parallel-loop limit on the unit circle") {
  const ParametricLoop c = make_circle(1.0);
  const auto r = parallel_limit(c, default_delta_schedule(c));
  const double expected = unit_circle_H() + 4.0 * pi * std::log(2.0);
  CHECK(r.value == doctest::Approx(expected).epsilon(2e-4));
  CHECK(r.diagnostic("implied_H") == doctest::Approx(unit_circle_H()).epsilon(2e-4));
  CHECK(r.method == Method::parallel_limit);

  const std::vector<double> zero = {0.01, 0.005, 0.0025, 0.0};
  CHECK(code_of([&] { parallel_limit(c, zero); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { parallel_limit(make_segment(1.0), std::vector<double>{0.01, 0.005, 0.0025, 0.00125}); }) ==
        ErrorCode::unsupported_curve);
}

TEST_CASE("SI results are the reduced ones times 1e-7") {
  const ParametricLoop c = make_circle(1.0);
  const auto eps = default_epsilon_schedule(c);
  const auto r = hadamard_self(c, N, eps);
  const auto s = hadamard_self(c, N, eps, {}, UnitSystem::si);
  CHECK(s.value == doctest::Approx(1e-7 * r.value).epsilon(1e-14));
  CHECK(s.units == UnitSystem::si);
}

TEST_CASE("circle value (log 2 - 1) mu0/pi disagrees with the definition by 2 pi") {
  // Reduced units: mu0 = 4 pi, so (log 2 - 1) mu0/pi = 4(log 2 - 1).
  const double alternative = 4.0 * (std::log(2.0) - 1.0);
  const double h = hadamard_default(make_circle(1.0), N).value;
  CHECK(h == doctest::Approx(2.0 * pi * alternative).epsilon(1e-8));
  CHECK(std::abs(h - alternative) > 1.0);
}
