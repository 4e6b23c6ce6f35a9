#include "dmorse.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <new>

#include "eigensolver.hpp"
#include "error.hpp"
#include "morse_model.hpp"
#include "ode_oracle.hpp"
#include "units_presets.hpp"
#include "wavefunctions.hpp"

using namespace dmorse;

struct dmorse_problem {
    Problem impl;
};

struct dmorse_state {
    BoundState unit;       // norm 1
    BoundState normalized; // meaningful when has_norm
    bool has_norm = false;
};

namespace {

dmorse_status map_code(errc code) {
    switch (code) {
    case errc::invalid_argument:
        return DMORSE_ERR_INVALID_ARGUMENT;
    case errc::negative_discriminant_alpha8:
        return DMORSE_ERR_NEGATIVE_DISCRIMINANT_ALPHA8;
    case errc::negative_discriminant_alpha9:
        return DMORSE_ERR_NEGATIVE_DISCRIMINANT_ALPHA9;
    case errc::wrong_branch:
        return DMORSE_ERR_WRONG_BRANCH;
    case errc::domain_error:
        return DMORSE_ERR_DOMAIN;
    case errc::empty_domain:
        return DMORSE_ERR_EMPTY_DOMAIN;
    case errc::no_root:
        return DMORSE_ERR_NO_ROOT;
    case errc::no_eigenvalue:
        return DMORSE_ERR_NO_EIGENVALUE;
    case errc::non_decaying_boundary:
        return DMORSE_ERR_NON_DECAYING_BOUNDARY;
    case errc::divergent_norm:
        return DMORSE_ERR_DIVERGENT_NORM;
    case errc::non_finite:
        return DMORSE_ERR_NON_FINITE;
    case errc::invalid_state:
        return DMORSE_ERR_INVALID_STATE;
    }
    return DMORSE_ERR_INTERNAL;
}

template <typename Fn> dmorse_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const solver_error& e) {
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        return DMORSE_ERR_INTERNAL;
    } catch (...) {
        return DMORSE_ERR_INTERNAL;
    }
}

SolverConfig convert_config(const dmorse_solver_config* config) {
    SolverConfig c;
    if (config) {
        c.scan_points = config->scan_points;
        c.abs_tol = config->abs_tol;
        c.max_bisections = config->max_bisections;
        if (config->has_window)
            c.energy_window = {config->window_lo, config->window_hi};
    }
    return c;
}

UnitConvention convert_convention(dmorse_convention convention,
                                  bool& ok) {
    ok = true;
    switch (convention) {
    case DMORSE_CONVENTION_RAW:
        return UnitConvention::raw_numbers;
    case DMORSE_CONVENTION_HARTREE:
        return UnitConvention::hartree_atomic;
    case DMORSE_CONVENTION_AMU:
        return UnitConvention::amu_mass_unit;
    }
    ok = false;
    return UnitConvention::raw_numbers;
}

} // namespace

extern "C" {

const char* dmorse_version(void) { return "0.1.0"; }

const char* dmorse_status_message(dmorse_status status) {
    switch (status) {
    case DMORSE_OK:
        return "ok";
    case DMORSE_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case DMORSE_ERR_NEGATIVE_DISCRIMINANT_ALPHA8:
        return "negative discriminant (alpha8): outside bound-state domain";
    case DMORSE_ERR_NEGATIVE_DISCRIMINANT_ALPHA9:
        return "negative discriminant (alpha9): outside bound-state domain";
    case DMORSE_ERR_WRONG_BRANCH:
        return "operation called on the wrong solution family";
    case DMORSE_ERR_DOMAIN:
        return "evaluation point outside the admissible domain";
    case DMORSE_ERR_EMPTY_DOMAIN:
        return "no admissible energy region";
    case DMORSE_ERR_NO_ROOT:
        return "admissible region carries no root";
    case DMORSE_ERR_NO_EIGENVALUE:
        return "no shooting eigenvalue with the requested node count";
    case DMORSE_ERR_NON_DECAYING_BOUNDARY:
        return "decaying boundary conditions not applicable";
    case DMORSE_ERR_DIVERGENT_NORM:
        return "normalization integral did not converge";
    case DMORSE_ERR_NON_FINITE:
        return "integrand produced a non-finite value";
    case DMORSE_ERR_INVALID_STATE:
        return "state does not describe a decaying bound shape";
    case DMORSE_ERR_BUFFER_TOO_SMALL:
        return "buffer too small";
    case DMORSE_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

dmorse_status dmorse_quantum_numbers(int kappa, int* ell, int* ell_tilde,
                                     double* j) {
    return guarded([&] {
        const QuantumNumbers qn = quantum_numbers_from_kappa(kappa);
        if (ell)
            *ell = qn.ell;
        if (ell_tilde)
            *ell_tilde = qn.ell_tilde;
        if (j)
            *j = qn.j;
        return DMORSE_OK;
    });
}

dmorse_status dmorse_preset_co(dmorse_preset* out) {
    if (!out)
        return DMORSE_ERR_INVALID_ARGUMENT;
    const MoleculePreset p = co_preset();
    out->d_ev = p.D_eV;
    out->r0_angstrom = p.r0_angstrom;
    out->m0_amu = p.m0_amu;
    out->a_per_angstrom = p.a_width;
    return DMORSE_OK;
}

dmorse_status dmorse_preset_to_internal(const dmorse_preset* preset,
                                        dmorse_convention convention,
                                        double* d, double* r0, double* a,
                                        double* m0) {
    if (!preset || !d || !r0 || !a || !m0)
        return DMORSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        bool ok = false;
        const UnitConvention conv = convert_convention(convention, ok);
        if (!ok)
            return DMORSE_ERR_INVALID_ARGUMENT;
        MoleculePreset p;
        p.name = "custom";
        p.D_eV = preset->d_ev;
        p.r0_angstrom = preset->r0_angstrom;
        p.m0_amu = preset->m0_amu;
        p.a_width = preset->a_per_angstrom;
        const InternalParams ip = to_internal(p, conv);
        *d = ip.D;
        *r0 = ip.r0;
        *a = ip.a;
        *m0 = ip.m0;
        return DMORSE_OK;
    });
}

dmorse_status dmorse_internal_to_preset(double d, double r0, double a,
                                        double m0,
                                        dmorse_convention convention,
                                        dmorse_preset* out) {
    if (!out)
        return DMORSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        bool ok = false;
        const UnitConvention conv = convert_convention(convention, ok);
        if (!ok)
            return DMORSE_ERR_INVALID_ARGUMENT;
        const MoleculePreset p = to_preset_units({d, r0, a, m0}, conv);
        out->d_ev = p.D_eV;
        out->r0_angstrom = p.r0_angstrom;
        out->m0_amu = p.m0_amu;
        out->a_per_angstrom = p.a_width;
        return DMORSE_OK;
    });
}

dmorse_status dmorse_problem_create(dmorse_mode mode, double d, double r0,
                                    double a, double m0, double a_const,
                                    int kappa, dmorse_problem** out) {
    if (!out)
        return DMORSE_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        SymmetryMode sym;
        switch (mode) {
        case DMORSE_MODE_PDM:
            sym = SymmetryMode::pdm();
            break;
        case DMORSE_MODE_PSEUDOSPIN:
            sym = SymmetryMode::pseudospin(a_const);
            break;
        case DMORSE_MODE_SPIN:
            sym = SymmetryMode::spin(a_const);
            break;
        default:
            return DMORSE_ERR_INVALID_ARGUMENT;
        }
        auto handle = new dmorse_problem{
            Problem::make(sym, MorsePotential(d, r0, a), m0, kappa)};
        *out = handle;
        return DMORSE_OK;
    });
}

void dmorse_problem_free(dmorse_problem* problem) { delete problem; }

void dmorse_solver_config_init(dmorse_solver_config* config) {
    if (!config)
        return;
    const SolverConfig defaults;
    config->scan_points = defaults.scan_points;
    config->abs_tol = defaults.abs_tol;
    config->max_bisections = defaults.max_bisections;
    config->has_window = 0;
    config->window_lo = 0.0;
    config->window_hi = 0.0;
}

dmorse_status dmorse_admissible_domain(const dmorse_problem* problem,
                                       const dmorse_solver_config* config,
                                       dmorse_interval* out, int capacity,
                                       int* count) {
    if (!problem || !count || (capacity > 0 && !out))
        return DMORSE_ERR_INVALID_ARGUMENT;
    *count = 0;
    return guarded([&] {
        const auto domain =
            admissible_domain(problem->impl, 0, convert_config(config));
        *count = static_cast<int>(domain.size());
        if (static_cast<int>(domain.size()) > capacity)
            return DMORSE_ERR_BUFFER_TOO_SMALL;
        for (std::size_t i = 0; i < domain.size(); ++i)
            out[i] = {domain[i].lo, domain[i].hi};
        return DMORSE_OK;
    });
}

dmorse_status dmorse_solve(const dmorse_problem* problem, int n,
                           const dmorse_solver_config* config,
                           dmorse_root* out, int capacity, int* count) {
    if (!problem || !count || (capacity > 0 && !out))
        return DMORSE_ERR_INVALID_ARGUMENT;
    *count = 0;
    return guarded([&] {
        const RootResult result =
            solve_energy(problem->impl, n, convert_config(config));
        *count = static_cast<int>(result.roots.size());
        if (static_cast<int>(result.roots.size()) > capacity)
            return DMORSE_ERR_BUFFER_TOO_SMALL;
        for (std::size_t i = 0; i < result.roots.size(); ++i) {
            out[i].energy = result.roots[i].energy;
            out[i].residual = result.roots[i].residual;
            out[i].bracket_lo = result.roots[i].bracket_lo;
            out[i].bracket_hi = result.roots[i].bracket_hi;
        }
        return DMORSE_OK;
    });
}

dmorse_status dmorse_residual(const dmorse_problem* problem, double energy,
                              int n, double* out) {
    if (!problem || !out)
        return DMORSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = residual(problem->impl, energy, n);
        return DMORSE_OK;
    });
}

dmorse_status dmorse_state_create(const dmorse_problem* problem, int n,
                                  double energy, dmorse_state** out) {
    if (!problem || !out)
        return DMORSE_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        auto handle = new dmorse_state;
        handle->unit = make_bound_state(problem->impl, n, energy);
        handle->has_norm = false;
        *out = handle;
        return DMORSE_OK;
    });
}

void dmorse_state_free(dmorse_state* state) { delete state; }

dmorse_status dmorse_state_normalize(dmorse_state* state) {
    if (!state)
        return DMORSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        state->normalized = normalize(state->unit);
        state->has_norm = true;
        return DMORSE_OK;
    });
}

dmorse_status dmorse_state_info(const dmorse_state* state, double* energy,
                                double* w1, double* w2, double* norm) {
    if (!state)
        return DMORSE_ERR_INVALID_ARGUMENT;
    const BoundState& s = state->has_norm ? state->normalized : state->unit;
    if (energy)
        *energy = s.energy;
    if (w1)
        *w1 = s.w1;
    if (w2)
        *w2 = s.w2;
    if (norm)
        *norm = s.norm;
    return DMORSE_OK;
}

dmorse_status dmorse_state_sample(const dmorse_state* state, double r_lo,
                                  double r_hi, int count, double* r,
                                  double* s, double* value,
                                  double* value_normalized) {
    if (!state)
        return DMORSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const RadialSamples raw = sample_radial(state->unit, r_lo, r_hi, count);
        const double nfactor =
            state->has_norm ? state->normalized.norm : state->unit.norm;
        const double a = state->unit.problem.potential.a;
        const double r0 = state->unit.problem.potential.r0;
        for (int i = 0; i < count; ++i) {
            if (r)
                r[i] = raw.r[i];
            if (s)
                s[i] = std::exp(-a * (raw.r[i] - r0));
            if (value)
                value[i] = raw.value[i];
            if (value_normalized)
                value_normalized[i] = raw.value[i] * nfactor;
        }
        return DMORSE_OK;
    });
}

dmorse_status dmorse_shoot(const dmorse_problem* problem, int n,
                           double bracket_lo, double bracket_hi, int steps,
                           int approximated, dmorse_shoot_result* out) {
    if (!problem || !out)
        return DMORSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        GridSpec grid;
        if (steps > 0)
            grid.steps = steps;
        const ShootResult res =
            shoot_eigenvalue(problem->impl, n, bracket_lo, bracket_hi, grid,
                             approximated != 0);
        out->energy = res.energy;
        out->nodes = res.nodes;
        out->mismatch = res.mismatch;
        out->converged = res.converged ? 1 : 0;
        return DMORSE_OK;
    });
}

dmorse_status dmorse_pekeris_error(const dmorse_problem* problem, int n,
                                   double bracket_lo, double bracket_hi,
                                   int steps, double* rel_error) {
    if (!problem || !rel_error)
        return DMORSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        GridSpec grid;
        if (steps > 0)
            grid.steps = steps;
        *rel_error = pekeris_error_report(problem->impl, n, bracket_lo,
                                          bracket_hi, grid);
        return DMORSE_OK;
    });
}

dmorse_status dmorse_scan_conventions(const dmorse_preset* preset,
                                      dmorse_scan_entry* out, int capacity,
                                      int* count, int* best_convention,
                                      double* best_max_deviation) {
    if (!preset || !count || (capacity > 0 && !out))
        return DMORSE_ERR_INVALID_ARGUMENT;
    *count = 0;
    return guarded([&] {
        MoleculePreset p;
        p.name = "scan";
        p.D_eV = preset->d_ev;
        p.r0_angstrom = preset->r0_angstrom;
        p.m0_amu = preset->m0_amu;
        p.a_width = preset->a_per_angstrom;
        const ScanReport report = convention_scan(p);
        *count = static_cast<int>(report.entries.size());
        if (static_cast<int>(report.entries.size()) > capacity)
            return DMORSE_ERR_BUFFER_TOO_SMALL;
        const auto& rows = co_reference_rows();
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            const ScanEntry& e = report.entries[i];
            dmorse_scan_entry& c = out[i];
            c.convention = static_cast<int>(e.convention);
            c.row = e.row;
            c.n = e.n;
            c.kappa = rows[e.row].kappa;
            c.ell_tilde = rows[e.row].ell_tilde;
            std::snprintf(c.state, sizeof(c.state), "%s", rows[e.row].state);
            c.target_abs_energy = rows[e.row].abs_energy;
            c.status = static_cast<int>(e.status);
            c.energy = e.energy;
            c.rel_deviation = e.rel_deviation;
            c.residual = e.residual;
        }
        if (best_convention)
            *best_convention =
                report.any_matched ? static_cast<int>(report.best) : -1;
        if (best_max_deviation)
            *best_max_deviation =
                report.any_matched ? report.best_max_deviation : -1.0;
        return DMORSE_OK;
    });
}

} // extern "C"
