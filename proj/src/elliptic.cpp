#include "selfind/elliptic.hpp"

#include <cmath>
#include <numbers>

#include "selfind/error.hpp"

namespace selfind {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

void check_param(double m, bool allow_one) {
  if (!std::isfinite(m)) fail(ErrorCode::domain, "elliptic parameter must be finite");
  if (allow_one ? m > 1.0 : m >= 1.0)
    fail(ErrorCode::domain, allow_one ? "E(m) requires m <= 1" : "K(m) requires m < 1");
}

}  // namespace

double elliptic_K(double m) {
  check_param(m, false);
  double a = 1.0, b = std::sqrt(1.0 - m);
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kHalfPi / a;
}

double elliptic_E(double m) {
  check_param(m, true);
  if (m == 1.0) return 1.0;
  double a = 1.0, b = std::sqrt(1.0 - m);
  // E = K (1 - sum 2^(n-1) c_n^2), c_0^2 = m.
  double sum = 0.5 * m, pow2 = 0.5;
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  return kHalfPi / a * (1.0 - sum);
}

double elliptic_K_quadrature(double m, const QuadratureSpec& spec) {
  check_param(m, false);
  auto f = [m](double t) {
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - m * s * s);
  };
  return integrate_1d(f, 0.0, kHalfPi, spec).value;
}

double elliptic_E_quadrature(double m, const QuadratureSpec& spec) {
  check_param(m, true);
  auto f = [m](double t) {
    const double s = std::sin(t);
    return std::sqrt(std::max(0.0, 1.0 - m * s * s));
  };
  return integrate_1d(f, 0.0, kHalfPi, spec).value;
}

}  // namespace selfind
