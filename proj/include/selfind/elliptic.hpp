#pragma once

#include "selfind/quadrature.hpp"

namespace selfind {

// Complete elliptic integrals in the parameter convention
//   K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt,
//   E(m) = int_0^{pi/2} (1 - m sin^2 t)^{1/2} dt.
// Tables in the modulus convention use K(k) with m = k^2; negative m (an
// imaginary modulus) is valid here.

// Arithmetic-geometric mean iteration. K requires m < 1, E requires m <= 1.
double elliptic_K(double m);
double elliptic_E(double m);

// Direct quadrature of the defining integrals; the reference path.
double elliptic_K_quadrature(double m, const QuadratureSpec& spec = {});
double elliptic_E_quadrature(double m, const QuadratureSpec& spec = {});

}  // namespace selfind
