#include "morse_model.hpp"

#include <cmath>

namespace dmorse {

MorsePotential::MorsePotential(double D_, double r0_, double a_)
    : D(D_), r0(r0_), a(a_) {
    if (!(D > 0.0) || !(r0 > 0.0) || !(a > 0.0))
        fail(errc::invalid_argument,
             "MorsePotential: D, r0 and a must be positive");
    if (!std::isfinite(D) || !std::isfinite(r0) || !std::isfinite(a))
        fail(errc::invalid_argument, "MorsePotential: non-finite parameter");
}

MassFunction MassFunction::position_dependent(double m0,
                                              const MorsePotential& pot) {
    if (!std::isfinite(m0))
        fail(errc::invalid_argument, "MassFunction: non-finite rest mass");
    return {m0, 2.0 * pot.D, -pot.D};
}

MassFunction MassFunction::constant(double m0) {
    if (!std::isfinite(m0))
        fail(errc::invalid_argument, "MassFunction: non-finite rest mass");
    return {m0, 0.0, 0.0};
}

QuantumNumbers quantum_numbers_from_kappa(int kappa) {
    if (kappa == 0)
        fail(errc::invalid_argument, "quantum numbers: kappa must be nonzero");
    QuantumNumbers qn;
    qn.kappa = kappa;
    qn.aligned = kappa < 0;
    qn.ell = kappa > 0 ? kappa : -kappa - 1;
    qn.ell_tilde = kappa > 0 ? kappa - 1 : -kappa;
    qn.j = std::abs(kappa) - 0.5;
    return qn;
}

void pekeris_coefficients(double beta, double& c1, double& c2, double& c3) {
    if (!(beta > 0.0))
        fail(errc::domain_error, "pekeris_coefficients: beta must be positive");
    const double u = 1.0 / beta;
    c1 = 1.0 - 3.0 * u + 3.0 * u * u;
    c2 = 4.0 * u - 6.0 * u * u;
    c3 = -u + 3.0 * u * u;
}

double centrifugal_strength(int kappa, double r0, RadialComponent component) {
    if (kappa == 0)
        fail(errc::invalid_argument, "centrifugal_strength: kappa is zero");
    if (!(r0 > 0.0))
        fail(errc::invalid_argument, "centrifugal_strength: r0 must be positive");
    const double k = static_cast<double>(kappa);
    const double num =
        component == RadialComponent::lower ? k * (k - 1.0) : k * (k + 1.0);
    return num / (r0 * r0);
}

double morse_value(const MorsePotential& pot, double x) {
    const double s = std::exp(-pot.beta() * x);
    return pot.D * s * s - 2.0 * pot.D * s;
}

double mass_value(const MassFunction& m, double beta, double x) {
    const double s = std::exp(-beta * x);
    return m.m0 + m.m1 * s + m.m2 * s * s;
}

Problem Problem::make(SymmetryMode mode, const MorsePotential& pot, double m0,
                      int kappa) {
    Problem p;
    p.potential = pot;
    p.mode = mode;
    p.qn = quantum_numbers_from_kappa(kappa);
    p.mass = mode.kind == SymmetryKind::pdm
                 ? MassFunction::position_dependent(m0, pot)
                 : MassFunction::constant(m0);
    if (mode.kind != SymmetryKind::pdm && !std::isfinite(mode.A))
        fail(errc::invalid_argument, "Problem: non-finite symmetry constant");
    return p;
}

PekerisCoefficients Problem::pekeris() const {
    PekerisCoefficients c;
    pekeris_coefficients(potential.beta(), c.c1, c.c2, c.c3);
    c.strength = centrifugal_strength(qn.kappa, potential.r0,
                                      mode.component());
    return c;
}

XiTriple xi_parameters(const Problem& problem, double E) {
    if (!std::isfinite(E))
        fail(errc::invalid_argument, "xi_parameters: non-finite energy");
    const double d = problem.potential.delta();
    const double d2 = d * d;
    const double D = problem.potential.D;
    const double m0 = problem.mass.m0;
    const PekerisCoefficients pk = problem.pekeris();
    const double s0 = pk.strength;

    XiTriple xi;
    switch (problem.mode.kind) {
    case SymmetryKind::pdm: {
        const double dm = m0 - E;
        xi.xi1 = d2 * (s0 * pk.c3 + dm * (problem.mass.m2 - D));
        xi.xi2 = -d2 * (s0 * pk.c2 + dm * (problem.mass.m1 + 2.0 * D));
        xi.xi3 = d2 * (s0 * pk.c1 + m0 * m0 - E * E);
        break;
    }
    case SymmetryKind::pseudospin: {
        const double M = m0 + problem.mode.A - E;
        xi.xi1 = d2 * (s0 * pk.c3 - M * D);
        xi.xi2 = -d2 * (2.0 * M * D + s0 * pk.c2);
        xi.xi3 = d2 * (s0 * pk.c1 + M * (m0 + E));
        break;
    }
    case SymmetryKind::spin: {
        const double Mp = m0 + E - problem.mode.A;
        xi.xi1 = d2 * (s0 * pk.c3 + D * Mp);
        xi.xi2 = d2 * (2.0 * D * Mp - s0 * pk.c2);
        xi.xi3 = d2 * (s0 * pk.c1 + Mp * (m0 - E));
        break;
    }
    }
    return xi;
}

NuInput nu_input(const Problem& problem, double E) {
    const XiTriple xi = xi_parameters(problem, E);
    NuInput in;
    in.alpha1 = 1.0;
    in.alpha2 = 0.0;
    in.alpha3 = 0.0;
    in.xi1 = xi.xi1;
    in.xi2 = xi.xi2;
    in.xi3 = xi.xi3;
    return in;
}

} // namespace dmorse
