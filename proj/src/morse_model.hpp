#pragma once

#include "error.hpp"
#include "nu_core.hpp"

namespace dmorse {

// Generalized Morse potential
//   V(x) = D exp(-2 beta x) - 2 D exp(-beta x),   x = r/r0 - 1,
// with dissociation energy D, equilibrium distance r0 and width a.
// beta = a r0 and delta = 1/a are always derived from (a, r0), never stored,
// so the triple cannot fall out of sync.
struct MorsePotential {
    double D = 0.0;
    double r0 = 0.0;
    double a = 0.0;

    MorsePotential() = default;
    MorsePotential(double D_, double r0_, double a_);

    double beta() const { return a * r0; }
    double delta() const { return 1.0 / a; }
};

// Position-dependent mass m(x) = m0 + m1 exp(-beta x) + m2 exp(-2 beta x).
// The PDM factory ties (m1, m2) = (2D, -D) to the potential; the constant
// factory zeroes them.
struct MassFunction {
    double m0 = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;

    static MassFunction position_dependent(double m0, const MorsePotential& pot);
    static MassFunction constant(double m0);
};

// Spin-orbit bookkeeping for a nonzero integer kappa:
//   kappa (kappa+1) = ell (ell+1),  kappa (kappa-1) = ell_tilde (ell_tilde+1),
//   j = |kappa| - 1/2.  kappa < 0 is the aligned case.
struct QuantumNumbers {
    int kappa = 0;
    int ell = 0;
    int ell_tilde = 0;
    double j = 0.0;
    bool aligned = false;
};

QuantumNumbers quantum_numbers_from_kappa(int kappa);

// Which second-order radial equation a mode reduces: the lower spinor
// component carries kappa(kappa-1)/r^2, the upper one kappa(kappa+1)/r^2.
enum class RadialComponent { lower, upper };

enum class SymmetryKind { pdm, pseudospin, spin };

// PDM carries no constant; the constant-mass limits carry the flat potential
// value A (the constant sum or difference potential).
struct SymmetryMode {
    SymmetryKind kind = SymmetryKind::pdm;
    double A = 0.0;

    static SymmetryMode pdm() { return {SymmetryKind::pdm, 0.0}; }
    static SymmetryMode pseudospin(double A) {
        return {SymmetryKind::pseudospin, A};
    }
    static SymmetryMode spin(double A) { return {SymmetryKind::spin, A}; }

    RadialComponent component() const {
        return kind == SymmetryKind::spin ? RadialComponent::upper
                                          : RadialComponent::lower;
    }
};

// Three-term exponential replacement of the centrifugal 1/(1+x)^2 factor,
// matched to second order at x = 0:
//   c1 = 1 - 3/beta + 3/beta^2
//   c2 = 4/beta - 6/beta^2
//   c3 = -1/beta + 3/beta^2
struct PekerisCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double strength = 0.0; // kappa(kappa-1)/r0^2 or kappa(kappa+1)/r0^2
};

void pekeris_coefficients(double beta, double& c1, double& c2, double& c3);

double centrifugal_strength(int kappa, double r0, RadialComponent component);

double morse_value(const MorsePotential& pot, double x);

double mass_value(const MassFunction& m, double beta, double x);

// Energy-dependent quadratic coefficients of the reduced equation in
// s = exp(-beta x); already carry the delta^2 factor.
struct XiTriple {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
};

// A fully specified bound-state problem (quantum number n is passed to the
// individual operations, not stored here).
struct Problem {
    MorsePotential potential;
    MassFunction mass;
    SymmetryMode mode;
    QuantumNumbers qn;

    static Problem make(SymmetryMode mode, const MorsePotential& pot,
                        double m0, int kappa);

    // Pekeris coefficients paired with the mode's centrifugal strength.
    PekerisCoefficients pekeris() const;
};

// Mode-specific map from (problem, E) to the xi coefficients:
//   PDM:        xi1 =  d2 [a0 a3 + (m0-E)(m2-D)]
//               xi2 = -d2 [a0 a2 + (m0-E)(m1+2D)]
//               xi3 =  d2 (a0 a1 + m0^2 - E^2)
//   pseudospin: xi1 =  d2 (a0 a3 - M D)          M  = m0 + A - E
//               xi2 = -d2 (2 M D + a0 a2)
//               xi3 =  d2 [a0 a1 + M (m0+E)]
//   spin:       xi1 =  d2 (b0 b3 + M' D)         M' = m0 + E - A
//               xi2 =  d2 (2 D M' - b0 b2)
//               xi3 =  d2 [b0 b1 + M' (m0-E)]
// with d2 = delta^2 and (a0, ai) / (b0, bi) the component's centrifugal
// strength and Pekeris coefficients.
XiTriple xi_parameters(const Problem& problem, double E);

// NU input corresponding to xi_parameters: alpha1 = 1, alpha2 = alpha3 = 0.
NuInput nu_input(const Problem& problem, double E);

} // namespace dmorse
