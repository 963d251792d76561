#pragma once

#include <span>

#include "selfind/curve.hpp"
#include "selfind/forms.hpp"
#include "selfind/quadrature.hpp"
#include "selfind/result.hpp"

namespace selfind {

// Integrand numerator over r^alpha: (T1.T2) for Neumann, (rhat.T1)(rhat.T2)
// for Weber.
Kernel inductance_kernel(InductanceForm form, double alpha = 1.0);

// Numerator times r^z, the integrand of F(z).
Kernel riesz_kernel(InductanceForm form, double z);

// Throws ErrorCode::proximity unless the curves are disjoint, i.e. their
// minimal chord distance exceeds 1e-6 max(L1, L2).
void require_disjoint(const ParametricLoop& a, const ParametricLoop& b);

// (mu0/4pi) times the double integral of the chosen kernel.
double mutual_inductance(const ParametricLoop& a, const ParametricLoop& b, InductanceForm form,
                         UnitSystem units = UnitSystem::reduced, const QuadratureSpec& spec = {});

// The kernel at power alpha, no prefactor.
double power_alpha_energy(const ParametricLoop& a, const ParametricLoop& b, double alpha, InductanceForm form,
                          const QuadratureSpec& spec = {});

// Finite part of the self energy with kernel numerator / r^2. The counter
// term is 2L/eps for either form, pinned; the model adds c1 eps + c3 eps^3.
RegularizationResult power2_self_regularized(const ParametricLoop& loop, InductanceForm form,
                                             std::span<const double> eps, const QuadratureSpec& spec = {},
                                             UnitSystem units = UnitSystem::reduced);

}  // namespace selfind
