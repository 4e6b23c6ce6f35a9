#pragma once

#include "error.hpp"

namespace dmorse {

// Input parameters of the parametric Nikiforov-Uvarov scheme, i.e. the
// coefficients of
//
//   psi''(s) + (alpha1 - alpha2 s) / (s (1 - alpha3 s)) psi'(s)
//            + (-xi1 s^2 + xi2 s - xi3) / (s (1 - alpha3 s))^2 psi(s) = 0.
//
// alpha3 selects the solution family: it must be exactly 0 for the
// exponential/Laguerre branch, strictly nonzero for the Jacobi branch.
struct NuInput {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
};

// Derived parameter set:
//   alpha4  = (1 - alpha1) / 2
//   alpha5  = (alpha2 - 2 alpha3) / 2
//   alpha6  = alpha5^2 + xi1
//   alpha7  = 2 alpha4 alpha5 - xi2
//   alpha8  = alpha4^2 + xi3
//   alpha9  = alpha3 alpha7 + alpha3^2 alpha8 + alpha6
//   alpha10 = alpha1 + 2 alpha4 + 2 sqrt(alpha8)
//   alpha11 = alpha2 - 2 alpha5 + 2 (sqrt(alpha9) + alpha3 sqrt(alpha8))
//   alpha12 = alpha4 + sqrt(alpha8)
//   alpha13 = alpha5 - (sqrt(alpha9) + alpha3 sqrt(alpha8))
struct NuDerived {
    double alpha4 = 0.0;
    double alpha5 = 0.0;
    double alpha6 = 0.0;
    double alpha7 = 0.0;
    double alpha8 = 0.0;
    double alpha9 = 0.0;
    double alpha10 = 0.0;
    double alpha11 = 0.0;
    double alpha12 = 0.0;
    double alpha13 = 0.0;
};

// Computes the derived set. Requires alpha8 >= 0 and alpha9 >= 0; a negative
// square-root argument means the parameter point lies outside the bound-state
// domain and raises negative_discriminant_alpha8 / _alpha9.
NuDerived derive_parameters(const NuInput& in);

// Quantization residual for the alpha3 != 0 family:
//   alpha2 n - (2n+1) alpha5 + (2n+1)(sqrt(alpha9) + alpha3 sqrt(alpha8))
//   + n(n-1) alpha3 + alpha7 + 2 alpha3 alpha8 + 2 sqrt(alpha8 alpha9)
// Zero exactly when n is an eigen-index. Raises wrong_branch if alpha3 == 0.
double eigen_residual_general(const NuDerived& d, const NuInput& in, int n);

// Quantization residual for the alpha3 == 0 family, reduced at alpha3 = 0:
//   alpha2 n - 2 alpha5 n + (2n+1) sqrt(alpha9) + alpha7
//   - 2 sqrt(alpha8 alpha9) + alpha5
// The unreduced form carries extra alpha3-dependent terms
//   (2n+1)(-alpha3 sqrt(alpha8)) + n(n-1) alpha3 + 2 alpha3 alpha8,
// which all vanish here; only the alpha3 = 0 reduction is evaluated or
// asserted. Raises wrong_branch if alpha3 != 0.
double eigen_residual_degenerate(const NuDerived& d, const NuInput& in, int n);

// Unnormalized eigenfunction of the alpha3 != 0 family,
//   s^alpha12 (1 - alpha3 s)^(-alpha12 - alpha13/alpha3)
//     * P_n^(alpha10 - 1, alpha11/alpha3 - alpha10 - 1)(1 - 2 alpha3 s),
// valid for s in (0, 1/alpha3) when alpha3 > 0 (s > 0 when alpha3 < 0).
double eigenfunction_general(const NuDerived& d, const NuInput& in, int n,
                             double s);

// Unnormalized eigenfunction of the alpha3 == 0 family,
//   s^alpha12 exp(alpha13 s) L_n^(alpha10 - 1)(alpha11 s),   s >= 0
// (s = 0 evaluated as the limit). Requires alpha13 < 0 so the function decays
// as s -> inf; raises non_decaying otherwise.
double eigenfunction_degenerate(const NuDerived& d, int n, double s);

} // namespace dmorse
