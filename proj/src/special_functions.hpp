#pragma once

#include <functional>

#include "error.hpp"

namespace dmorse {

// Generalized Laguerre polynomial L_n^a(x), three-term recurrence.
// Stable for the orders used here (n up to ~50) and non-integer a > -1.
double laguerre(int n, double a, double x);

// Jacobi polynomial P_n^(a,b)(x), three-term recurrence. The recurrence is a
// polynomial identity, so x is not restricted to [-1, 1] even though the
// orthogonality interval is.
double jacobi(int n, double a, double b, double x);

// Composite fixed-panel quadrature over a finite interval.
enum class QuadratureScheme {
    gauss_legendre_15, // 15-point Gauss-Legendre per panel
};

struct QuadratureSpec {
    QuadratureScheme scheme = QuadratureScheme::gauss_legendre_15;
    double lo = 0.0;
    double hi = 1.0;
    int panels = 4096; // >= 2

    QuadratureSpec() = default;
    QuadratureSpec(double lo_, double hi_, int panels_ = 4096);
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0; // |full - half-resolution| difference
};

// Gauss-Legendre panels; raises non_finite if the integrand produces a
// non-finite value at any node.
IntegralResult integrate(const std::function<double(double)>& f,
                         const QuadratureSpec& spec);

// Integral over [lo, inf) for integrands that decay exponentially. The upper
// cutoff is discovered by geometric probing until |f| stays below 1e-300
// (the integrand is probed at a few staggered points to avoid stopping on an
// isolated zero); the finite remainder uses integrate() with `panels`.
IntegralResult integrate_to_infinity(const std::function<double(double)>& f,
                                     double lo, int panels = 4096,
                                     double initial_scale = 1.0);

} // namespace dmorse
