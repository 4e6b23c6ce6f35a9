#include "ode_oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace dmorse {

void GridSpec::validate() const {
    if (steps < 100)
        fail(errc::invalid_argument, "GridSpec: need at least 100 steps");
    if (!std::isnan(x_min) && !std::isnan(x_max) && !(x_min < x_max))
        fail(errc::invalid_argument, "GridSpec: x_min must be below x_max");
}

namespace {

double mass_potential_term(const Problem& problem, double E, double s) {
    const double D = problem.potential.D;
    const double m0 = problem.mass.m0;
    switch (problem.mode.kind) {
    case SymmetryKind::pdm:
        return (m0 - E) * ((m0 + E) + (problem.mass.m1 + 2.0 * D) * s +
                           (problem.mass.m2 - D) * s * s);
    case SymmetryKind::pseudospin: {
        const double M = m0 + problem.mode.A - E;
        const double v = D * s * s - 2.0 * D * s;
        return M * (m0 + E - v);
    }
    case SymmetryKind::spin: {
        const double Mp = m0 + E - problem.mode.A;
        const double v = D * s * s - 2.0 * D * s;
        return Mp * (m0 - E + v);
    }
    }
    fail(errc::invalid_argument, "mass_potential_term: unknown mode");
}

} // namespace

double effective_ode_rhs(const Problem& problem, double E, double x,
                         bool approximated) {
    const double beta = problem.potential.beta();
    const double r0 = problem.potential.r0;
    const double s = std::exp(-beta * x);
    const PekerisCoefficients pk = problem.pekeris();
    double centrifugal;
    if (approximated) {
        centrifugal = pk.strength * (pk.c1 + pk.c2 * s + pk.c3 * s * s);
    } else {
        if (!(x > -1.0))
            fail(errc::domain_error,
                 "effective_ode_rhs: exact centrifugal needs r > 0");
        const double onex = 1.0 + x;
        centrifugal = pk.strength / (onex * onex);
    }
    return r0 * r0 * (centrifugal + mass_potential_term(problem, E, s));
}

namespace {

constexpr double kWkbFolds = 40.0;    // decay e-folds padded on each side
constexpr double kRescaleAt = 1e200;  // renormalization threshold

struct Workspace {
    std::vector<double> x;
    std::vector<double> q;        // Q(x_i) for the current energy
    std::vector<double> left;     // outward sweep
    std::vector<double> right;    // inward sweep
    int i0 = 0;                   // first index the outward sweep trusts
    int match = 0;
};

// Classically allowed s-range of the Pekeris-form equation at energy E, i.e.
// the positive roots of xi1 s^2 - xi2 s + xi3. Empty when the energy has no
// oscillatory region.
bool allowed_s_range(const Problem& problem, double E, double& s_lo,
                     double& s_hi) {
    const XiTriple xi = xi_parameters(problem, E);
    if (!(xi.xi1 > 0.0))
        return false;
    const double disc = xi.xi2 * xi.xi2 - 4.0 * xi.xi1 * xi.xi3;
    if (!(disc > 0.0))
        return false;
    const double root = std::sqrt(disc);
    s_lo = (xi.xi2 - root) / (2.0 * xi.xi1);
    s_hi = (xi.xi2 + root) / (2.0 * xi.xi1);
    return s_hi > 0.0;
}

// Decay-padded x-domain for one probe energy; false if the probe carries no
// allowed region.
bool probe_bounds(const Problem& problem, double E, DomainPolicy policy,
                  double& x_min, double& x_max) {
    const double beta = problem.potential.beta();
    double s_lo = 0.0, s_hi = 0.0;
    if (!allowed_s_range(problem, E, s_lo, s_hi))
        return false;
    const XiTriple xi = xi_parameters(problem, E);
    if (!(xi.xi3 > 0.0))
        return false; // no exponential decay toward s -> 0

    // Left of the well (s above s_hi): integral of sqrt(Q) dx is about
    // sqrt(xi1) * (s - s_hi), so kWkbFolds of decay need this much extra s.
    const double s_left = s_hi + kWkbFolds / std::sqrt(xi.xi1);
    x_min = -std::log(s_left) / beta;
    // Right of the well the decay rate tends to beta sqrt(xi3).
    const double x_turn = s_lo > 0.0
                              ? -std::log(s_lo) / beta
                              : -std::log(s_hi * 1e-3) / beta;
    x_max = x_turn + kWkbFolds / (beta * std::sqrt(xi.xi3));
    if (policy == DomainPolicy::physical)
        x_min = -1.0 + 1e-6;
    return x_max > x_min;
}

void fill_q(const Problem& problem, double E, bool approximated,
            Workspace& ws) {
    const std::size_t count = ws.x.size();
    ws.q.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        ws.q[i] = effective_ode_rhs(problem, E, ws.x[i], approximated);
}

// Numerov sweep toward the match point. Returns false when the sweep hits a
// non-finite value.
bool sweep(const std::vector<double>& q, double h, int from, int to, int dir,
           std::vector<double>& y) {
    const double h2_12 = h * h / 12.0;
    for (int i = from + dir; dir > 0 ? i <= to : i >= to; i += dir) {
        const double um = h2_12 * q[i - 2 * dir];
        const double uc = h2_12 * q[i - dir];
        const double up = h2_12 * q[i];
        const double next = ((2.0 + 10.0 * uc) * y[i - dir] -
                             (1.0 - um) * y[i - 2 * dir]) /
                            (1.0 - up);
        y[i] = next;
        if (!std::isfinite(next))
            return false;
        // Renormalize well before overflow, but never within two points of
        // the end so the match-point triplet shares one scale.
        const bool near_end = dir > 0 ? i >= to - 2 : i <= to + 2;
        if (!near_end && std::fabs(next) > kRescaleAt) {
            y[i] *= 1.0 / kRescaleAt;
            y[i - dir] *= 1.0 / kRescaleAt;
        }
    }
    return true;
}

struct MatchEval {
    double defect = 0.0;    // sign-carrying matching function
    double mismatch = 0.0;  // normalized magnitude of the defect
    int nodes = 0;
    bool valid = false;
};

MatchEval evaluate_energy(const Problem& problem, double E, bool approximated,
                          int start_power, Workspace& ws) {
    MatchEval out;
    fill_q(problem, E, approximated, ws);
    const int count = static_cast<int>(ws.x.size());
    const int last = count - 1;
    const double h = ws.x[1] - ws.x[0];
    if (!(ws.q[0] > 0.0) || !(ws.q[last] > 0.0))
        return out; // boundary not decaying at this energy

    auto& yl = ws.left;
    auto& yr = ws.right;
    yl.assign(count, 0.0);
    yr.assign(count, 0.0);

    // Outward start. Power-law start values below the trusted index keep the
    // stored array meaningful but never enter matching or node counting.
    const int i0 = ws.i0;
    if (start_power > 0) {
        // phi ~ r^p through the singular region, i.e. (1+x)^p in x.
        for (int i = 0; i <= i0 + 1; ++i)
            yl[i] = std::pow(1.0 + ws.x[i], start_power);
    } else {
        yl[i0] = 1e-160;
        yl[i0 + 1] =
            yl[i0] * std::exp(0.5 * (std::sqrt(ws.q[i0]) +
                                     std::sqrt(std::max(ws.q[i0 + 1], 0.0))) *
                              h);
    }
    // Inward start, same WKB estimate mirrored.
    yr[last] = 1e-160;
    yr[last - 1] =
        yr[last] * std::exp(0.5 * (std::sqrt(ws.q[last]) +
                                   std::sqrt(std::max(ws.q[last - 1], 0.0))) *
                            h);

    const int m = ws.match;
    if (!sweep(ws.q, h, i0 + 1, m + 1, +1, yl))
        return out;
    if (!sweep(ws.q, h, last - 1, m - 1, -1, yr))
        return out;
    if (yl[m] == 0.0 && yr[m] == 0.0)
        return out;

    const double dl = yl[m + 1] - yl[m - 1];
    const double dr = yr[m + 1] - yr[m - 1];
    out.defect = dl * yr[m] - dr * yl[m];
    const double scale = std::fabs(yl[m + 1] * yr[m]) +
                         std::fabs(yl[m - 1] * yr[m]) +
                         std::fabs(yr[m + 1] * yl[m]) +
                         std::fabs(yr[m - 1] * yl[m]) + 1e-300;
    out.mismatch = std::fabs(out.defect) / scale;

    // Nodes are counted inside the classically allowed region only; in the
    // forbidden zones a true eigenfunction has no zeros and the sweeps carry
    // start-up artifacts near a singular origin.
    int turn_lo = -1, turn_hi = -1;
    for (int i = 0; i < count; ++i) {
        if (ws.q[i] < 0.0) {
            if (turn_lo < 0)
                turn_lo = i;
            turn_hi = i;
        }
    }
    if (turn_lo < 0)
        return out; // no oscillatory region: not a bound-state energy
    const double scale_match =
        yr[m] != 0.0 ? yl[m] / yr[m]
                     : (yl[m + 1] != 0.0 ? yl[m + 1] / yr[m + 1] : 1.0);
    int nodes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = std::max(turn_lo, i0 + 1); i <= std::min(turn_hi, last - 1);
         ++i) {
        const double v = i <= m ? yl[i] : yr[i] * scale_match;
        if (v == 0.0)
            continue;
        if (have_prev && (prev < 0.0) != (v < 0.0))
            ++nodes;
        prev = v;
        have_prev = true;
    }
    out.nodes = nodes;
    out.valid = true;
    return out;
}

} // namespace

ShootResult shoot_eigenvalue_on(const Problem& problem, int n, double e_lo,
                                double e_hi, const GridSpec& grid,
                                CentrifugalForm form, DomainPolicy policy) {
    if (n < 0)
        fail(errc::invalid_argument, "shoot: n < 0");
    if (!(e_lo < e_hi))
        fail(errc::invalid_argument, "shoot: empty energy bracket");
    grid.validate();
    const bool approximated = form == CentrifugalForm::pekeris;

    // Union of decay-padded domains over a dense probe of the bracket; the
    // oscillatory zone can occupy a thin slice of it.
    double x_min = grid.x_min;
    double x_max = grid.x_max;
    if (std::isnan(x_min) || std::isnan(x_max)) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        bool any = false;
        constexpr int kProbes = 160;
        for (int i = 0; i <= kProbes; ++i) {
            const double e =
                e_lo + (i + 0.5) * (e_hi - e_lo) / (kProbes + 1);
            double pl = 0.0, ph = 0.0;
            if (probe_bounds(problem, e, policy, pl, ph)) {
                lo = std::min(lo, pl);
                hi = std::max(hi, ph);
                any = true;
            }
        }
        if (!any)
            fail(errc::no_eigenvalue,
                 "shoot: no classically allowed region inside bracket");
        if (std::isnan(x_min))
            x_min = lo;
        if (std::isnan(x_max))
            x_max = hi;
    }
    if (policy == DomainPolicy::physical)
        x_min = std::max(x_min, -1.0 + 1e-6);
    if (!(x_min < x_max))
        fail(errc::invalid_argument, "shoot: degenerate x domain");

    Workspace ws;
    const int count = grid.steps + 1;
    ws.x.resize(count);
    const double h = (x_max - x_min) / grid.steps;
    for (int i = 0; i < count; ++i)
        ws.x[i] = x_min + i * h;

    // Power-series start on the physical domain; the sweep is trusted from
    // the first index where the Numerov coefficient h^2 Q / 12 is small.
    int start_power = 0;
    ws.i0 = 0;
    if (policy == DomainPolicy::physical) {
        const QuantumNumbers& qn = problem.qn;
        start_power = problem.mode.component() == RadialComponent::lower
                          ? qn.ell_tilde + 1
                          : qn.ell + 1;
        const double e_mid = 0.5 * (e_lo + e_hi);
        int i0 = 0;
        for (int i = 0; i < count - 4; ++i) {
            const double u =
                h * h / 12.0 *
                std::fabs(effective_ode_rhs(problem, e_mid, ws.x[i],
                                            approximated));
            if (u <= 0.25) {
                i0 = i;
                break;
            }
            i0 = i + 1;
        }
        ws.i0 = i0;
    }

    // Probe the boundary behaviour once up front.
    {
        const double e_mid = 0.5 * (e_lo + e_hi);
        const double q_lo =
            effective_ode_rhs(problem, e_mid, ws.x[ws.i0], approximated);
        const double q_hi =
            effective_ode_rhs(problem, e_mid, ws.x[count - 1], approximated);
        if (!(q_lo > 0.0) || !(q_hi > 0.0))
            fail(errc::non_decaying_boundary,
                 "shoot: Q <= 0 at a grid end, no decaying start possible");
    }

    // Fix the match point near the deepest point of the well at mid-bracket.
    {
        fill_q(problem, 0.5 * (e_lo + e_hi), approximated, ws);
        int m = count / 2;
        double best = std::numeric_limits<double>::infinity();
        for (int i = ws.i0 + 4; i < count - 4; ++i) {
            if (ws.q[i] < best) {
                best = ws.q[i];
                m = i;
            }
        }
        ws.match = std::clamp(m, ws.i0 + 4, count - 4);
    }

    const auto eval = [&](double e) {
        return evaluate_energy(problem, e, approximated, start_power, ws);
    };

    // Scan the bracket for sign changes of the matching defect, bisect each,
    // and keep the converged energy carrying n nodes.
    constexpr int kScan = 144;
    MatchEval prev;
    double e_prev = 0.0;
    for (int i = 0; i <= kScan; ++i) {
        const double e = e_lo + (i + 0.5) * (e_hi - e_lo) / (kScan + 1);
        MatchEval cur = eval(e);
        if (!cur.valid) {
            prev.valid = false;
            continue;
        }
        if (prev.valid && (prev.defect < 0.0) != (cur.defect < 0.0)) {
            double lo = e_prev, hi = e;
            double flo = prev.defect;
            MatchEval at_mid;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi)
                    break;
                at_mid = eval(mid);
                if (!at_mid.valid)
                    break;
                if (at_mid.defect == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((flo < 0.0) == (at_mid.defect < 0.0)) {
                    lo = mid;
                    flo = at_mid.defect;
                } else {
                    hi = mid;
                }
                if (hi - lo <= 1e-15 * std::max(1.0, std::fabs(mid)))
                    break;
            }
            const double e_root = 0.5 * (lo + hi);
            const MatchEval final_eval = eval(e_root);
            if (final_eval.valid && final_eval.nodes == n) {
                ShootResult res;
                res.energy = e_root;
                res.nodes = final_eval.nodes;
                res.mismatch = final_eval.mismatch;
                res.converged = final_eval.mismatch <= 1e-6;
                return res;
            }
        }
        prev = cur;
        e_prev = e;
    }
    fail(errc::no_eigenvalue,
         "shoot: no matching eigenvalue with the requested node count");
}

ShootResult shoot_eigenvalue(const Problem& problem, int n, double e_lo,
                             double e_hi, const GridSpec& grid,
                             bool approximated) {
    return shoot_eigenvalue_on(problem, n, e_lo, e_hi, grid,
                               approximated ? CentrifugalForm::pekeris
                                            : CentrifugalForm::exact,
                               approximated ? DomainPolicy::full_line
                                            : DomainPolicy::physical);
}

double pekeris_error_report(const Problem& problem, int n, double e_lo,
                            double e_hi, const GridSpec& grid) {
    const ShootResult approx =
        shoot_eigenvalue_on(problem, n, e_lo, e_hi, grid,
                            CentrifugalForm::pekeris, DomainPolicy::physical);
    const ShootResult exact =
        shoot_eigenvalue_on(problem, n, e_lo, e_hi, grid,
                            CentrifugalForm::exact, DomainPolicy::physical);
    return std::fabs(approx.energy - exact.energy) / std::fabs(exact.energy);
}

} // namespace dmorse
