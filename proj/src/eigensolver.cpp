#include "eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace dmorse {

void SolverConfig::validate() const {
    if (scan_points < 2)
        fail(errc::invalid_argument, "SolverConfig: scan_points < 2");
    if (!(abs_tol > 0.0))
        fail(errc::invalid_argument, "SolverConfig: abs_tol must be positive");
    if (max_bisections < 1)
        fail(errc::invalid_argument, "SolverConfig: max_bisections < 1");
    if (energy_window && energy_window->first > energy_window->second)
        fail(errc::invalid_argument, "SolverConfig: window lo above hi");
}

EnergyBranch mode_branch(const SymmetryMode& mode) {
    return mode.kind == SymmetryKind::spin ? EnergyBranch::positive
                                           : EnergyBranch::negative;
}

namespace {

std::pair<double, double> default_window(const Problem& problem) {
    // Rest mass plus potential-depth scales bound the mass terms, but the
    // centrifugal contribution pushes the xi3 >= 0 region out to roughly
    // sqrt(s0 a1 + m0^2); cover that reach as well.
    const PekerisCoefficients pk = problem.pekeris();
    const double centrifugal_reach = std::sqrt(
        std::fabs(pk.strength) *
        (std::fabs(pk.c1) + std::fabs(pk.c2) + std::fabs(pk.c3)));
    const double span = std::fabs(problem.mass.m0) +
                        2.0 * problem.potential.D +
                        std::fabs(problem.mode.A) + centrifugal_reach + 1.0;
    return {-span, span};
}

// Locates a sign change of g between lo and hi by bisection.
double refine_crossing(const std::function<double(double)>& g, double lo,
                       double hi, double glo) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        const double gm = g(mid);
        if (gm == 0.0)
            return mid;
        if ((glo < 0.0) == (gm < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void collect_crossings(const std::function<double(double)>& g, double lo,
                       double hi, int samples, std::vector<double>& out) {
    const double h = (hi - lo) / (samples - 1);
    double eprev = lo;
    double gprev = g(lo);
    for (int i = 1; i < samples; ++i) {
        const double e = (i == samples - 1) ? hi : lo + i * h;
        const double gc = g(e);
        if (gc == 0.0) {
            out.push_back(e);
        } else if (gprev != 0.0 && (gprev < 0.0) != (gc < 0.0)) {
            out.push_back(refine_crossing(g, eprev, e, gprev));
        }
        eprev = e;
        gprev = gc;
    }
}

} // namespace

std::vector<EnergyInterval> admissible_domain(const Problem& problem, int n,
                                              const SolverConfig& config) {
    (void)n;
    config.validate();
    const auto window =
        config.energy_window ? *config.energy_window : default_window(problem);
    std::vector<EnergyInterval> result;
    if (!(window.first < window.second)) {
        fail(errc::empty_domain, "admissible_domain: empty energy window");
    }

    const auto g1 = [&](double e) { return xi_parameters(problem, e).xi1; };
    const auto g3 = [&](double e) { return xi_parameters(problem, e).xi3; };

    std::vector<double> edges{window.first, window.second};
    collect_crossings(g1, window.first, window.second, config.scan_points,
                      edges);
    collect_crossings(g3, window.first, window.second, config.scan_points,
                      edges);
    std::sort(edges.begin(), edges.end());

    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i];
        const double hi = edges[i + 1];
        if (!(lo < hi))
            continue;
        const double mid = 0.5 * (lo + hi);
        const XiTriple xi = xi_parameters(problem, mid);
        if (xi.xi1 > 0.0 && xi.xi3 >= 0.0) {
            if (!result.empty() && result.back().hi == lo)
                result.back().hi = hi; // merge contiguous pieces
            else
                result.push_back({lo, hi});
        }
    }
    if (result.empty())
        fail(errc::empty_domain,
             "admissible_domain: no energy region with xi1 > 0 and xi3 >= 0");
    return result;
}

namespace {

// Pieces of the mode's eigenvalue condition written in physical parameters:
// ratio_term is xi2 / sqrt(xi1) assembled from the long expressions,
// sqrt_term is sqrt(xi3) likewise, and level_term is (2n+1), everything in
// the scaling of the mode's quoted form (the pseudospin line is the xi form
// times 1/delta, the other two carry delta explicitly).
struct ConditionTerms {
    double ratio_term = 0.0;
    double sqrt_term = 0.0;
    double level_term = 0.0;
};

ConditionTerms condition_terms(const Problem& problem, double E, int n) {
    const PekerisCoefficients pk = problem.pekeris();
    const double s0 = pk.strength;
    const double D = problem.potential.D;
    const double m0 = problem.mass.m0;
    const double d = problem.potential.delta();
    const double two_n1 = 2.0 * n + 1.0;

    double arg3 = 0.0, arg1 = 0.0;
    ConditionTerms t;
    switch (problem.mode.kind) {
    case SymmetryKind::pdm: {
        const double dm = m0 - E;
        arg3 = s0 * pk.c1 + m0 * m0 - E * E;
        arg1 = s0 * pk.c3 + dm * (problem.mass.m2 - D);
        if (!(arg1 > 0.0) || arg3 < 0.0)
            fail(errc::domain_error,
                 "residual: energy outside admissible domain");
        t.ratio_term = -d * (s0 * pk.c2 + dm * (problem.mass.m1 + 2.0 * D)) /
                       std::sqrt(arg1);
        t.sqrt_term = d * std::sqrt(arg3);
        t.level_term = two_n1;
        break;
    }
    case SymmetryKind::pseudospin: {
        const double M = m0 + problem.mode.A - E;
        arg3 = s0 * pk.c1 + M * (m0 + E);
        arg1 = s0 * pk.c3 - D * M;
        if (!(arg1 > 0.0) || arg3 < 0.0)
            fail(errc::domain_error,
                 "residual: energy outside admissible domain");
        t.ratio_term = -(s0 * pk.c2 + 2.0 * D * M) / std::sqrt(arg1);
        t.sqrt_term = std::sqrt(arg3);
        t.level_term = problem.potential.a * two_n1;
        break;
    }
    case SymmetryKind::spin: {
        const double Mp = m0 + E - problem.mode.A;
        arg3 = s0 * pk.c1 + Mp * (m0 - E);
        arg1 = s0 * pk.c3 + D * Mp;
        if (!(arg1 > 0.0) || arg3 < 0.0)
            fail(errc::domain_error,
                 "residual: energy outside admissible domain");
        t.ratio_term = d * (2.0 * D * Mp - s0 * pk.c2) / std::sqrt(arg1);
        t.sqrt_term = d * std::sqrt(arg3);
        t.level_term = two_n1;
        break;
    }
    }
    return t;
}

XiTriple checked_xi(const Problem& problem, double E) {
    const XiTriple xi = xi_parameters(problem, E);
    if (!(xi.xi1 > 0.0) || xi.xi3 < 0.0)
        fail(errc::domain_error,
             "residual: energy outside admissible domain");
    return xi;
}

} // namespace

double residual(const Problem& problem, double E, int n) {
    if (n < 0)
        fail(errc::invalid_argument, "residual: n < 0");
    const ConditionTerms t = condition_terms(problem, E, n);
    return t.ratio_term - 2.0 * t.sqrt_term - t.level_term;
}

double residual_xi_form(const Problem& problem, double E, int n) {
    if (n < 0)
        fail(errc::invalid_argument, "residual_xi_form: n < 0");
    const XiTriple xi = checked_xi(problem, E);
    return xi.xi2 / std::sqrt(xi.xi1) - 2.0 * std::sqrt(xi.xi3) -
           (2.0 * n + 1.0);
}

double residual_mirror(const Problem& problem, double E, int n) {
    if (n < 0)
        fail(errc::invalid_argument, "residual_mirror: n < 0");
    const ConditionTerms t = condition_terms(problem, E, n);
    return t.ratio_term + 2.0 * t.sqrt_term - t.level_term;
}

double residual_mirror_xi_form(const Problem& problem, double E, int n) {
    if (n < 0)
        fail(errc::invalid_argument, "residual_mirror_xi_form: n < 0");
    const XiTriple xi = checked_xi(problem, E);
    return xi.xi2 / std::sqrt(xi.xi1) + 2.0 * std::sqrt(xi.xi3) -
           (2.0 * n + 1.0);
}

RootResult solve_energy(const Problem& problem, int n,
                        const SolverConfig& config) {
    if (n < 0)
        fail(errc::invalid_argument, "solve_energy: n < 0");
    config.validate();

    RootResult result;
    result.domain = admissible_domain(problem, n, config);
    result.branch = mode_branch(problem.mode);

    // Clip to the mode's energy branch.
    std::vector<EnergyInterval> search;
    for (const auto& iv : result.domain) {
        EnergyInterval c = iv;
        if (result.branch == EnergyBranch::negative)
            c.hi = std::min(c.hi, 0.0);
        else
            c.lo = std::max(c.lo, 0.0);
        if (c.lo < c.hi)
            search.push_back(c);
    }
    if (search.empty())
        fail(errc::empty_domain,
             "solve_energy: admissible domain does not meet the energy branch");

    const auto f = [&](double e) { return residual(problem, e, n); };

    for (const auto& iv : search) {
        const double step = (iv.hi - iv.lo) / config.scan_points;
        bool have_prev = false;
        double eprev = 0.0, fprev = 0.0;
        for (int i = 0; i < config.scan_points; ++i) {
            const double e = iv.lo + (i + 0.5) * step;
            double fe;
            try {
                fe = f(e);
            } catch (const solver_error&) {
                have_prev = false; // boundary fuzz; restart bracketing
                continue;
            }
            if (!std::isfinite(fe)) {
                have_prev = false;
                continue;
            }
            if (fe == 0.0) {
                result.roots.push_back({e, 0.0, e, e});
                have_prev = false;
                continue;
            }
            if (have_prev && (fprev < 0.0) != (fe < 0.0)) {
                double lo = eprev, hi = e, flo = fprev;
                for (int it = 0; it < config.max_bisections; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (mid == lo || mid == hi)
                        break;
                    const double fm = f(mid);
                    if (fm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((flo < 0.0) == (fm < 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                const double root = 0.5 * (lo + hi);
                const double fr = f(root);
                if (std::fabs(fr) <= config.abs_tol)
                    result.roots.push_back({root, fr, eprev, e});
            }
            eprev = e;
            fprev = fe;
            have_prev = true;
        }
    }

    std::sort(result.roots.begin(), result.roots.end(),
              [](const Root& a, const Root& b) { return a.energy < b.energy; });
    if (result.roots.empty())
        fail(errc::no_root,
             "solve_energy: admissible domain contains no sign change");
    return result;
}

} // namespace dmorse
