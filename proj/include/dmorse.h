/*
 * dmorse - bound states of the Dirac equation with a generalized Morse
 * potential, for position-dependent mass and for the exact pseudospin / spin
 * symmetry limits.
 *
 * C interface of the shared library. All entry points return a status code;
 * results travel through out-parameters. Problems and bound states are
 * opaque handles owned by the library. Handles are immutable after creation
 * except where noted, and every function is safe to call concurrently on
 * distinct handles.
 */
#ifndef DMORSE_H
#define DMORSE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DMORSE_API __declspec(dllexport)
#else
#define DMORSE_API __attribute__((visibility("default")))
#endif

typedef enum dmorse_status {
    DMORSE_OK = 0,
    DMORSE_ERR_INVALID_ARGUMENT = 1,
    /* a square-root argument of the derived parameter set is negative */
    DMORSE_ERR_NEGATIVE_DISCRIMINANT_ALPHA8 = 2,
    DMORSE_ERR_NEGATIVE_DISCRIMINANT_ALPHA9 = 3,
    /* operation called on the wrong solution family */
    DMORSE_ERR_WRONG_BRANCH = 4,
    /* evaluation point outside the admissible domain */
    DMORSE_ERR_DOMAIN = 5,
    /* no admissible energy region exists */
    DMORSE_ERR_EMPTY_DOMAIN = 6,
    /* admissible region exists but carries no root */
    DMORSE_ERR_NO_ROOT = 7,
    /* shooting found no eigenvalue with the requested node count */
    DMORSE_ERR_NO_EIGENVALUE = 8,
    /* decaying boundary conditions not applicable */
    DMORSE_ERR_NON_DECAYING_BOUNDARY = 9,
    /* normalization integral could not be pinned down */
    DMORSE_ERR_DIVERGENT_NORM = 10,
    /* an integrand produced a non-finite value */
    DMORSE_ERR_NON_FINITE = 11,
    /* state parameters do not describe a decaying bound shape */
    DMORSE_ERR_INVALID_STATE = 12,
    /* caller-provided buffer cannot hold the result */
    DMORSE_ERR_BUFFER_TOO_SMALL = 13,
    DMORSE_ERR_INTERNAL = 14
} dmorse_status;

typedef enum dmorse_mode {
    DMORSE_MODE_PDM = 0,        /* position-dependent mass, negative branch */
    DMORSE_MODE_PSEUDOSPIN = 1, /* constant mass, negative branch */
    DMORSE_MODE_SPIN = 2        /* constant mass, positive branch */
} dmorse_mode;

typedef enum dmorse_convention {
    DMORSE_CONVENTION_RAW = 0,     /* quoted numbers used verbatim */
    DMORSE_CONVENTION_HARTREE = 1, /* Hartree / Bohr / electron masses */
    DMORSE_CONVENTION_AMU = 2      /* amu c^2 energies, hbar/(amu c) lengths */
} dmorse_convention;

typedef struct dmorse_problem dmorse_problem;
typedef struct dmorse_state dmorse_state;

DMORSE_API const char *dmorse_version(void);
DMORSE_API const char *dmorse_status_message(dmorse_status status);

/* Spin-orbit bookkeeping: kappa(kappa+1) = ell(ell+1),
 * kappa(kappa-1) = ell_tilde(ell_tilde+1), j = |kappa| - 1/2. */
DMORSE_API dmorse_status dmorse_quantum_numbers(int kappa, int *ell,
                                                int *ell_tilde, double *j);

/* -------- presets and unit conventions -------- */

typedef struct dmorse_preset {
    double d_ev;         /* dissociation energy, eV */
    double r0_angstrom;  /* equilibrium distance, Angstrom */
    double m0_amu;       /* rest mass, amu */
    double a_per_angstrom; /* width, 1/Angstrom */
} dmorse_preset;

DMORSE_API dmorse_status dmorse_preset_co(dmorse_preset *out);

DMORSE_API dmorse_status dmorse_preset_to_internal(const dmorse_preset *preset,
                                                   dmorse_convention convention,
                                                   double *d, double *r0,
                                                   double *a, double *m0);

DMORSE_API dmorse_status dmorse_internal_to_preset(double d, double r0,
                                                   double a, double m0,
                                                   dmorse_convention convention,
                                                   dmorse_preset *out);

/* -------- problems -------- */

/* a_const is the flat potential value of the constant-mass symmetry limits;
 * it is ignored in PDM mode. kappa must be a nonzero integer. */
DMORSE_API dmorse_status dmorse_problem_create(dmorse_mode mode, double d,
                                               double r0, double a, double m0,
                                               double a_const, int kappa,
                                               dmorse_problem **out);
DMORSE_API void dmorse_problem_free(dmorse_problem *problem);

/* -------- closed-form spectrum -------- */

typedef struct dmorse_solver_config {
    int scan_points;     /* samples per admissible interval (default 2000) */
    double abs_tol;      /* residual bound at reported roots (default 1e-12) */
    int max_bisections;  /* default 200 */
    int has_window;      /* nonzero: search [window_lo, window_hi] */
    double window_lo;
    double window_hi;
} dmorse_solver_config;

DMORSE_API void dmorse_solver_config_init(dmorse_solver_config *config);

typedef struct dmorse_interval {
    double lo;
    double hi;
} dmorse_interval;

/* Energy regions where the eigenvalue condition is real-valued. */
DMORSE_API dmorse_status dmorse_admissible_domain(
    const dmorse_problem *problem, const dmorse_solver_config *config,
    dmorse_interval *out, int capacity, int *count);

typedef struct dmorse_root {
    double energy;
    double residual;
    double bracket_lo;
    double bracket_hi;
} dmorse_root;

/* All roots of the quantization condition for radial index n on the mode's
 * energy branch, sorted by energy. config may be NULL for defaults. */
DMORSE_API dmorse_status dmorse_solve(const dmorse_problem *problem, int n,
                                      const dmorse_solver_config *config,
                                      dmorse_root *out, int capacity,
                                      int *count);

/* Quantization residual at an arbitrary admissible energy. */
DMORSE_API dmorse_status dmorse_residual(const dmorse_problem *problem,
                                         double energy, int n, double *out);

/* -------- wavefunctions -------- */

DMORSE_API dmorse_status dmorse_state_create(const dmorse_problem *problem,
                                             int n, double energy,
                                             dmorse_state **out);
DMORSE_API void dmorse_state_free(dmorse_state *state);

/* Rescales in place so the squared component integrates to 1 over r > 0. */
DMORSE_API dmorse_status dmorse_state_normalize(dmorse_state *state);

DMORSE_API dmorse_status dmorse_state_info(const dmorse_state *state,
                                           double *energy, double *w1,
                                           double *w2, double *norm);

/* Uniform r-grid samples; any output array may be NULL to skip it.
 * value carries the shape with norm = 1, value_normalized the normalized
 * component (equal to value when the state was never normalized). */
DMORSE_API dmorse_status dmorse_state_sample(const dmorse_state *state,
                                             double r_lo, double r_hi,
                                             int count, double *r, double *s,
                                             double *value,
                                             double *value_normalized);

/* -------- direct integration oracle -------- */

typedef struct dmorse_shoot_result {
    double energy;
    int nodes;
    double mismatch;
    int converged;
} dmorse_shoot_result;

/* Shooting eigenvalue with n nodes inside [bracket_lo, bracket_hi].
 * approximated != 0 integrates the same equation the closed form solves;
 * 0 integrates the exact-centrifugal equation on the physical domain.
 * steps <= 0 selects the default grid resolution. */
DMORSE_API dmorse_status dmorse_shoot(const dmorse_problem *problem, int n,
                                      double bracket_lo, double bracket_hi,
                                      int steps, int approximated,
                                      dmorse_shoot_result *out);

/* Relative energy shift introduced by the centrifugal replacement. */
DMORSE_API dmorse_status dmorse_pekeris_error(const dmorse_problem *problem,
                                              int n, double bracket_lo,
                                              double bracket_hi, int steps,
                                              double *rel_error);

/* -------- reference-spectrum convention scan -------- */

typedef enum dmorse_scan_status {
    DMORSE_SCAN_MATCHED = 0,
    DMORSE_SCAN_MISMATCH = 1,
    DMORSE_SCAN_EMPTY_DOMAIN = 2,
    DMORSE_SCAN_NO_ROOT = 3
} dmorse_scan_status;

typedef struct dmorse_scan_entry {
    int convention;      /* dmorse_convention */
    int row;             /* reference row index */
    int n;               /* polynomial-degree interpretation tried */
    int kappa;
    int ell_tilde;
    char state[8];       /* spectroscopic label of the row */
    double target_abs_energy;
    int status;          /* dmorse_scan_status */
    double energy;       /* best root, when one exists */
    double rel_deviation;
    double residual;
} dmorse_scan_entry;

#define DMORSE_SCAN_ENTRY_COUNT 24 /* 3 conventions x 4 rows x 2 n */

/* Solves the bundled CO reference rows under every convention and reports
 * per-entry outcomes. best_convention receives the convention matching all
 * rows (-1 when none does). */
DMORSE_API dmorse_status dmorse_scan_conventions(const dmorse_preset *preset,
                                                 dmorse_scan_entry *out,
                                                 int capacity, int *count,
                                                 int *best_convention,
                                                 double *best_max_deviation);

#ifdef __cplusplus
}
#endif

#endif /* DMORSE_H */
