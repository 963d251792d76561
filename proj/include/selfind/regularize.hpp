#pragma once

#include <span>
#include <vector>

#include "selfind/curve.hpp"
#include "selfind/forms.hpp"
#include "selfind/quadrature.hpp"
#include "selfind/result.hpp"

namespace selfind {

// Throws unless `values` are positive, strictly decreasing and below `upper`.
void validate_schedule(std::span<const double> values, double upper, const char* what);

// eps_k = base 2^-k, k = 0..5, with base = min(L/20, pi rho_min/10, separation
// scale); rho_min is the smallest radius of curvature.
std::vector<double> default_epsilon_schedule(const ParametricLoop& loop);
// z_k = -1 + 2^-k, k = 1..6.
std::vector<double> default_z_schedule();
// delta_k = rho_min 2^-k / 64, k = 0..5.
std::vector<double> default_delta_schedule(const ParametricLoop& loop);

// Hadamard finite part: integrates the strip-excluded self energy at each
// eps and fits I(eps) = c0 + 2L log(1/eps) + c2 eps^2 + c4 eps^4 with the log
// coefficient pinned (closed curves). Open curves use c1 eps + c2 eps^2 +
// c3 eps^3 for the remainder. A free fit of the log coefficient is reported
// and must match 2L within 1%, else ErrorCode::counter_term_mismatch.
RegularizationResult hadamard_self(const ParametricLoop& loop, InductanceForm form, std::span<const double> eps,
                                   const QuadratureSpec& spec = {}, UnitSystem units = UnitSystem::reduced);

struct ZEnergySample {
  double z = 0.0;
  double value = 0.0;
};

// F(z) = (mu0/4pi) times the full double integral of numerator r^z, z > -1.
ZEnergySample z_energy(const ParametricLoop& loop, InductanceForm form, double z, const QuadratureSpec& spec = {},
                       UnitSystem units = UnitSystem::reduced);

// Finite part at z = -1 of F(z) - 2L/(z+1), extrapolated from the schedule
// by a polynomial in (z+1) of degree n-2.
RegularizationResult continuation_self(const ParametricLoop& loop, InductanceForm form,
                                       std::span<const double> z_schedule, const QuadratureSpec& spec = {},
                                       UnitSystem units = UnitSystem::reduced);

// phi(t) = psi'(t), psi(t) the integral of the numerator over the part of
// the curve inside the chord ball of radius t around gamma(s1).
double phi_local(const ParametricLoop& loop, double s1, double t, InductanceForm form = InductanceForm::neumann);

// psi itself; exposed for tests.
double psi_local(const ParametricLoop& loop, double s1, double t, InductanceForm form = InductanceForm::neumann);

struct ResidueFitRange {
  // t runs over [t_min, t_max] * rho_min in `samples` equal steps.
  double t_min = 0.02;
  double t_max = 0.2;
  int samples = 12;
};

struct PhiExpansion {
  double s = 0.0;
  double curvature = 0.0;
  double a = 0.0;           // phi(0)
  double b = 0.0;           // t^2 coefficient
  double b_expected = 0.0;  // -3 kappa^2/4 (Neumann), -kappa^2/4 (Weber)
};

struct ResidueEstimates {
  double res1 = 0.0;
  double res3 = 0.0;
  double res1_expected = 0.0;  // 2L (mu0/4pi)
  double res3_expected = 0.0;  // -(3/4 or 1/4) (mu0/4pi) int kappa^2
  double max_phi0_error = 0.0;
  std::vector<PhiExpansion> points;
};

// Fits phi(t) = a + b t^2 + c3 t^3 + ... + c6 t^6 at quadrature base points and
// integrates a and b along the curve.
ResidueEstimates residue_estimates(const ParametricLoop& loop, InductanceForm form, const ResidueFitRange& range = {},
                                   const QuadratureSpec& spec = {}, UnitSystem units = UnitSystem::reduced);

// lim_{delta->0} L(G, G_delta) + 2L log(delta) from a fit
// c0 + c1 delta + c2 delta log(delta); the implied H_N = c0 - 2L log 2 is
// reported as diagnostic "implied_H".
RegularizationResult parallel_limit(const ParametricLoop& loop, std::span<const double> delta,
                                    const QuadratureSpec& spec = {}, UnitSystem units = UnitSystem::reduced,
                                    InductanceForm form = InductanceForm::neumann);

}  // namespace selfind
