#pragma once

#include <vector>

#include "eigensolver.hpp"
#include "morse_model.hpp"
#include "special_functions.hpp"

namespace dmorse {

// Radial spinor component for a converged energy. The shape parameters are
//   w1 = sqrt(xi3(E)),  w2 = sqrt(xi1(E)),
// which coincide with the physical-parameter forms
//   PDM:        w1  = d sqrt(a0 a1 + m0^2 - E^2)
//               w2  = d sqrt(a0 a3 + (m0-E)(m2-D))
//   pseudospin: w1' = d sqrt(a0 a1 + M (m0+E)),   w2' = d sqrt(a0 a3 - D M)
//   spin:       w1''= d sqrt(b0 b1 + M'(m0-E)),   w2''= d sqrt(b0 b3 + D M')
// The component itself is
//   phi(s) = norm * s^w1 * exp(-w2 s) * L_n^(2 w1)(2 w2 s),
// the lower spinor component for PDM/pseudospin, the upper one for spin.
struct BoundState {
    Problem problem;
    double energy = 0.0;
    int n = 0;
    double w1 = 0.0;
    double w2 = 0.0;
    double norm = 1.0;

    RadialComponent component() const { return problem.mode.component(); }
};

// Builds the state and its shape parameters from a converged energy. Raises
// invalid_state when w1 or w2 would not be strictly positive (no decaying
// bound shape at that energy).
BoundState make_bound_state(const Problem& problem, int n, double E);

// phi(s) as above, s > 0.
double component_value(const BoundState& state, double s);

// Samples on a uniform r grid; s(r) = exp(-a (r - r0)).
struct RadialSamples {
    std::vector<double> r;
    std::vector<double> value;
    RadialComponent component = RadialComponent::lower;
};

RadialSamples sample_radial(const BoundState& state, double r_lo, double r_hi,
                            int count);

// Returns a state rescaled so that the square of the component integrates to
// one over r in (0, inf). Only the mode's single available component enters
// the norm; the two-component Dirac normalization is out of scope here.
// `quad.panels` controls the resolution (the integration range itself is
// derived from the state's decay). Raises divergent_norm when the integral
// cannot be pinned down.
BoundState normalize(const BoundState& state, const QuadratureSpec& quad = {});

// Mass of |phi|^2 carried by the tail s in (exp(beta), inf), i.e. by r < 0.
// The closed form lives on all of s > 0 while the physical radial range stops
// at s = exp(beta); this reports how much the truncation discards (relative
// to the r > 0 norm integral).
double unphysical_tail_fraction(const BoundState& state,
                                const QuadratureSpec& quad = {});

} // namespace dmorse
