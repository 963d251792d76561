#pragma once

#include <span>
#include <vector>

#include "selfind/curve.hpp"
#include "selfind/forms.hpp"
#include "selfind/quadrature.hpp"

namespace selfind {

struct SolenoidSpec {
  double radius = 1.0;
  double length = 1.0;
  double turns_per_length = 1.0;  // n; n * length must be a whole number

  void validate() const;
  double turns() const { return turns_per_length * length; }
};

// Open helix of n*length turns over height `length`.
ParametricLoop helix_curve(const SolenoidSpec& spec);

// Arc length length * sqrt((2 pi n r)^2 + 1).
double helix_length(const SolenoidSpec& spec);

// Limit of H(Gamma_n)/n^2:
// (8 mu0/3)[-r^3 + (1/8)(-l(l^2-4r^2)E(-4r^2/l^2) + l(l^2+4r^2)K(-4r^2/l^2))].
double closed_form_L(double r, double length, UnitSystem units = UnitSystem::reduced);

// 2 mu0 r^3 int_0^{pi/2} (1 - 2 sin^2 t) int int dz1 dz2 / sqrt(4 sin^2 t + (z1-z2)^2)
// over [0, l/r]^2, with the inner pair reduced to one variable.
double cylinder_surface_oracle(double r, double length, UnitSystem units = UnitSystem::reduced,
                               const QuadratureSpec& spec = {});

// mu0 (pi r^2 l - 8 r^3 / 3).
double asymptotic_L(double r, double length, UnitSystem units = UnitSystem::reduced);

struct ConvergenceRow {
  double n = 0.0;
  double length = 0.0;      // helix arc length
  double value = 0.0;       // regularized self-inductance
  double per_n2 = 0.0;      // value / n^2
  double deviation = 0.0;   // |per_n2 - closed_form_L|
  double error_estimate = 0.0;
};

std::vector<ConvergenceRow> convergence_study(double r, double length, std::span<const double> n_list,
                                              InductanceForm form, const QuadratureSpec& spec = {},
                                              UnitSystem units = UnitSystem::reduced);

}  // namespace selfind
