#pragma once

#include <cmath>

#include "eigensolver.hpp"
#include "morse_model.hpp"

namespace dmorse {

// Direct integration of the second-order radial equations, used as an
// independent check on the closed-form spectra. Everything works in the
// dimensionless coordinate x = r/r0 - 1, in which the equation is
//   phi''(x) = Q(x) phi(x)
// with no first-derivative term; a fixed-step Numerov sweep from both ends
// plus log-derivative matching locates the eigenvalues.

// Which centrifugal term enters Q.
enum class CentrifugalForm {
    pekeris, // three-term exponential replacement (same equation the
             // closed-form solution solves)
    exact,   // kappa(kappa -+ 1)/r^2 as it stands
};

// Where the integration lives.
enum class DomainPolicy {
    full_line, // x in (-inf, inf); left end initialized by WKB decay.
               // This is the natural domain of the Pekeris-approximated
               // equation and of its closed-form solution.
    physical,  // r in (0, inf): starts at r = 1e-6 r0 with a power-series
               // start phi ~ r^p, p = ell_tilde + 1 (lower component) or
               // ell + 1 (upper component).
};

struct GridSpec {
    // NaN means "derive from the energy bracket": the classically allowed
    // region is padded by enough WKB decay on each side that the boundary
    // values are below double precision.
    double x_min = std::nan("");
    double x_max = std::nan("");
    int steps = 20000;

    void validate() const;
};

struct ShootResult {
    double energy = 0.0;
    int nodes = 0;
    double mismatch = 0.0; // normalized log-derivative defect at the match point
    bool converged = false;
};

// Q(x) of the mode's equation:
//   Q = r0^2 [ centrifugal + mass/potential term ]
// where the centrifugal piece is s0/(1+x)^2 exactly or
// s0 (c1 + c2 s + c3 s^2) under the Pekeris replacement (s0 the component's
// strength, s = exp(-beta x)), and the mass/potential term is
//   PDM:        (m0-E) [(m0+E) + (m1+2D) s + (m2-D) s^2]
//   pseudospin: (m0+A-E) (m0 + E - V(x))
//   spin:       (m0+E-A) (m0 - E + V(x))
// For the Pekeris form this collapses to beta^2 (xi1 s^2 - xi2 s + xi3).
double effective_ode_rhs(const Problem& problem, double E, double x,
                         bool approximated);

// Shooting eigenvalue search inside [e_lo, e_hi]: the matching defect is
// scanned for sign changes, each bracket is bisected, and the converged
// energy whose solution carries exactly n nodes (counted inside the
// classically allowed region) is returned. approximated=true solves the
// Pekeris equation on its full line; approximated=false solves the exact
// equation on the physical domain.
ShootResult shoot_eigenvalue(const Problem& problem, int n, double e_lo,
                             double e_hi, const GridSpec& grid,
                             bool approximated);

// Same machinery with the centrifugal form and domain chosen independently;
// shoot_eigenvalue and pekeris_error_report are thin wrappers over this.
ShootResult shoot_eigenvalue_on(const Problem& problem, int n, double e_lo,
                                double e_hi, const GridSpec& grid,
                                CentrifugalForm form, DomainPolicy policy);

// |E_pekeris - E_exact| / |E_exact| with both eigenvalues shot on the
// physical domain, so the quoted number isolates the centrifugal replacement
// and nothing else. When the centrifugal strength is zero the two runs are
// identical and the report is exactly zero.
double pekeris_error_report(const Problem& problem, int n, double e_lo,
                            double e_hi, const GridSpec& grid = {});

} // namespace dmorse
