#pragma once

// Fixed constant-mass test problems used by the oracle-equivalence and
// wavefunction-property suites. Every case has exactly one root for its
// radial index inside the branch-clipped admissible domain, confirmed
// against the shooting oracle when the set was frozen.

#include <array>

#include "morse_model.hpp"

namespace dmorse::testsuite {

struct SuiteCase {
    SymmetryKind kind;
    double D;
    double r0;
    double a;
    double m0;
    double A;
    int kappa;
    int n;
};

inline constexpr std::array<SuiteCase, 24> kOracleSuite = {{
    // spin symmetry limit (positive branch)
    {SymmetryKind::spin, 4.0, 1.4, 1.2, 10.0, 0.5, 1, 0},
    {SymmetryKind::spin, 4.0, 1.4, 1.2, 10.0, 0.5, -2, 0},
    {SymmetryKind::spin, 4.0, 1.4, 1.2, 10.0, 0.5, 2, 1},
    {SymmetryKind::spin, 5.0, 1.2, 1.0, 8.0, -0.3, -1, 0},
    {SymmetryKind::spin, 5.0, 1.2, 1.0, 8.0, -0.3, 1, 1},
    {SymmetryKind::spin, 3.0, 1.8, 0.9, 12.0, 0.0, 3, 0},
    {SymmetryKind::spin, 3.0, 1.8, 0.9, 12.0, 0.0, -3, 2},
    {SymmetryKind::spin, 6.0, 1.0, 1.5, 15.0, 1.0, 2, 0},
    {SymmetryKind::spin, 6.0, 1.0, 1.5, 15.0, 1.0, -2, 1},
    {SymmetryKind::spin, 4.5, 1.3, 1.1, 9.0, 0.2, 1, 2},
    {SymmetryKind::spin, 2.5, 2.0, 0.8, 7.0, -0.5, -4, 0},
    {SymmetryKind::spin, 5.5, 1.1, 1.3, 11.0, 0.4, 4, 1},
    // pseudospin symmetry limit (negative branch)
    {SymmetryKind::pseudospin, 0.5, 1.0, 1.0, 5.0, 0.0, -6, 0},
    {SymmetryKind::pseudospin, 0.5, 1.0, 1.0, 5.0, 0.0, -6, 1},
    {SymmetryKind::pseudospin, 0.5, 1.0, 1.0, 5.0, 0.5, -5, 0},
    {SymmetryKind::pseudospin, 0.5, 1.0, 1.0, 5.0, 0.5, -5, 1},
    {SymmetryKind::pseudospin, 0.3, 1.2, 1.0, 6.0, -0.4, -7, 0},
    {SymmetryKind::pseudospin, 0.5, 1.0, 1.0, 5.0, 0.0, -7, 1},
    {SymmetryKind::pseudospin, 0.8, 0.9, 1.2, 4.0, 0.3, -8, 0},
    {SymmetryKind::pseudospin, 0.4, 1.1, 1.1, 7.0, 0.0, 7, 0},
    {SymmetryKind::pseudospin, 0.4, 1.0, 1.1, 5.0, 0.1, 6, 0},
    {SymmetryKind::pseudospin, 0.45, 1.0, 1.2, 6.5, -0.5, -10, 0},
    {SymmetryKind::pseudospin, 0.5, 1.0, 1.0, 6.0, 0.0, -8, 2},
    {SymmetryKind::pseudospin, 0.35, 1.2, 1.0, 5.0, -0.3, -8, 0},
}};

inline Problem make_problem(const SuiteCase& c) {
    const SymmetryMode mode = c.kind == SymmetryKind::spin
                                  ? SymmetryMode::spin(c.A)
                                  : SymmetryMode::pseudospin(c.A);
    return Problem::make(mode, MorsePotential(c.D, c.r0, c.a), c.m0, c.kappa);
}

} // namespace dmorse::testsuite
