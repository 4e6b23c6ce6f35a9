#include "wavefunctions.hpp"

#include <cmath>

namespace dmorse {

BoundState make_bound_state(const Problem& problem, int n, double E) {
    if (n < 0)
        fail(errc::invalid_argument, "make_bound_state: n < 0");
    const XiTriple xi = xi_parameters(problem, E);
    if (!(xi.xi1 > 0.0))
        fail(errc::invalid_state,
             "make_bound_state: xi1 <= 0, component would not decay");
    if (!(xi.xi3 > 0.0))
        fail(errc::invalid_state,
             "make_bound_state: xi3 <= 0, power-law prefactor degenerates");
    BoundState state;
    state.problem = problem;
    state.energy = E;
    state.n = n;
    state.w1 = std::sqrt(xi.xi3);
    state.w2 = std::sqrt(xi.xi1);
    state.norm = 1.0;
    return state;
}

double component_value(const BoundState& state, double s) {
    if (!(state.w2 > 0.0))
        fail(errc::invalid_state, "component_value: w2 must be positive");
    if (!(s > 0.0))
        fail(errc::domain_error, "component_value: s must be positive");
    // s^w1 exp(-w2 s) evaluated in log space; either factor alone can leave
    // the double range while the product stays representable.
    const double envelope = std::exp(state.w1 * std::log(s) - state.w2 * s);
    return state.norm * envelope *
           laguerre(state.n, 2.0 * state.w1, 2.0 * state.w2 * s);
}

RadialSamples sample_radial(const BoundState& state, double r_lo, double r_hi,
                            int count) {
    if (!(r_lo > 0.0) || !(r_lo < r_hi))
        fail(errc::invalid_argument, "sample_radial: need 0 < r_lo < r_hi");
    if (count < 2)
        fail(errc::invalid_argument, "sample_radial: need at least 2 points");
    const double a = state.problem.potential.a;
    const double r0 = state.problem.potential.r0;
    RadialSamples out;
    out.component = state.component();
    out.r.reserve(count);
    out.value.reserve(count);
    const double h = (r_hi - r_lo) / (count - 1);
    for (int i = 0; i < count; ++i) {
        const double r = (i == count - 1) ? r_hi : r_lo + i * h;
        const double s = std::exp(-a * (r - r0));
        out.r.push_back(r);
        out.value.push_back(component_value(state, s));
    }
    return out;
}

namespace {

double norm_integral(const BoundState& state, int panels,
                     double* error_estimate) {
    const double a = state.problem.potential.a;
    const double r0 = state.problem.potential.r0;
    const auto density = [&](double r) {
        const double s = std::exp(-a * (r - r0));
        const double v = component_value(state, s);
        return v * v;
    };
    const double probe_scale = r0 + 3.0 / (a * state.w1);
    const IntegralResult res =
        integrate_to_infinity(density, 0.0, panels, probe_scale);
    if (error_estimate)
        *error_estimate = res.error_estimate;
    return res.value;
}

} // namespace

BoundState normalize(const BoundState& state, const QuadratureSpec& quad) {
    if (!(state.w1 > 0.0) || !(state.w2 > 0.0))
        fail(errc::invalid_state, "normalize: state has no decaying shape");
    double err = 0.0;
    double integral = 0.0;
    try {
        integral = norm_integral(state, quad.panels, &err);
    } catch (const solver_error& e) {
        if (e.code() == errc::domain_error || e.code() == errc::non_finite)
            fail(errc::divergent_norm, "normalize: integral did not converge");
        throw;
    }
    if (!(integral > 0.0) || !std::isfinite(integral) ||
        err > 1e-9 * integral)
        fail(errc::divergent_norm, "normalize: integral estimate unreliable");
    BoundState out = state;
    out.norm = state.norm / std::sqrt(integral);
    return out;
}

double unphysical_tail_fraction(const BoundState& state,
                                const QuadratureSpec& quad) {
    const double a = state.problem.potential.a;
    const double r0 = state.problem.potential.r0;
    const auto density_neg_r = [&](double t) {
        // t = -r > 0; same component continued past the physical origin
        const double s = std::exp(-a * (-t - r0));
        const double v = component_value(state, s);
        return v * v;
    };
    const double body = norm_integral(state, quad.panels, nullptr);
    const IntegralResult tail = integrate_to_infinity(
        density_neg_r, 0.0, quad.panels, 1.0 / (a * state.w2));
    return tail.value / body;
}

} // namespace dmorse
