#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "dmorse.h"

namespace {

struct ProblemHandle {
    dmorse_problem* p = nullptr;
    ~ProblemHandle() { dmorse_problem_free(p); }
};

struct StateHandle {
    dmorse_state* s = nullptr;
    ~StateHandle() { dmorse_state_free(s); }
};

} // namespace

TEST_CASE("version and status strings") {
    CHECK(std::string(dmorse_version()) == "0.1.0");
    CHECK(std::string(dmorse_status_message(DMORSE_OK)) == "ok");
    CHECK(std::strlen(dmorse_status_message(DMORSE_ERR_EMPTY_DOMAIN)) > 0);
}

TEST_CASE("quantum numbers through the C surface") {
    int ell = -1, ell_tilde = -1;
    double j = 0.0;
    REQUIRE(dmorse_quantum_numbers(-4, &ell, &ell_tilde, &j) == DMORSE_OK);
    CHECK(ell == 3);
    CHECK(ell_tilde == 4);
    CHECK(j == doctest::Approx(3.5));
    CHECK(dmorse_quantum_numbers(0, &ell, &ell_tilde, &j) ==
          DMORSE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("preset and conversions") {
    dmorse_preset co;
    REQUIRE(dmorse_preset_co(&co) == DMORSE_OK);
    CHECK(co.d_ev == 11.2256);
    CHECK(co.m0_amu == 6.8606719);

    double d, r0, a, m0;
    REQUIRE(dmorse_preset_to_internal(&co, DMORSE_CONVENTION_HARTREE, &d, &r0,
                                      &a, &m0) == DMORSE_OK);
    CHECK(r0 == doctest::Approx(2.13218).epsilon(1e-5));

    dmorse_preset back;
    REQUIRE(dmorse_internal_to_preset(d, r0, a, m0, DMORSE_CONVENTION_HARTREE,
                                      &back) == DMORSE_OK);
    CHECK(back.d_ev == doctest::Approx(co.d_ev).epsilon(1e-12));
    CHECK(back.r0_angstrom == doctest::Approx(co.r0_angstrom).epsilon(1e-12));
}

TEST_CASE("problem lifecycle and argument validation") {
    dmorse_problem* p = nullptr;
    CHECK(dmorse_problem_create(DMORSE_MODE_SPIN, -1.0, 1.0, 1.0, 5.0, 0.0, 1,
                                &p) == DMORSE_ERR_INVALID_ARGUMENT);
    CHECK(p == nullptr);
    CHECK(dmorse_problem_create(DMORSE_MODE_SPIN, 4.0, 1.4, 1.2, 10.0, 0.5, 0,
                                &p) == DMORSE_ERR_INVALID_ARGUMENT);
    REQUIRE(dmorse_problem_create(DMORSE_MODE_SPIN, 4.0, 1.4, 1.2, 10.0, 0.5,
                                  1, &p) == DMORSE_OK);
    REQUIRE(p != nullptr);
    dmorse_problem_free(p);
    dmorse_problem_free(nullptr); // must be a no-op
}

TEST_CASE("solve, state, sample and shoot through the shared library") {
    ProblemHandle h;
    REQUIRE(dmorse_problem_create(DMORSE_MODE_SPIN, 4.0, 1.4, 1.2, 10.0, 0.5,
                                  1, &h.p) == DMORSE_OK);

    dmorse_solver_config config;
    dmorse_solver_config_init(&config);
    CHECK(config.scan_points == 2000);
    CHECK(config.abs_tol == 1e-12);

    dmorse_interval domain[8];
    int nd = 0;
    REQUIRE(dmorse_admissible_domain(h.p, &config, domain, 8, &nd) ==
            DMORSE_OK);
    REQUIRE(nd >= 1);

    dmorse_root roots[8];
    int nr = 0;
    REQUIRE(dmorse_solve(h.p, 0, &config, roots, 8, &nr) == DMORSE_OK);
    REQUIRE(nr == 1);
    CHECK(roots[0].energy == doctest::Approx(6.63467261).epsilon(1e-8));
    CHECK(std::fabs(roots[0].residual) <= 1e-12);

    double res = 0.0;
    REQUIRE(dmorse_residual(h.p, roots[0].energy, 0, &res) == DMORSE_OK);
    CHECK(std::fabs(res) <= 1e-12);

    // buffer too small still reports the count
    int nr2 = 0;
    dmorse_root tiny[1];
    CHECK(dmorse_solve(h.p, 0, &config, tiny, 0, &nr2) ==
          DMORSE_ERR_BUFFER_TOO_SMALL);
    CHECK(nr2 == 1);

    StateHandle st;
    REQUIRE(dmorse_state_create(h.p, 0, roots[0].energy, &st.s) == DMORSE_OK);
    double E, w1, w2, norm;
    REQUIRE(dmorse_state_info(st.s, &E, &w1, &w2, &norm) == DMORSE_OK);
    CHECK(E == roots[0].energy);
    CHECK(w1 > 0.0);
    CHECK(w2 > 0.0);
    CHECK(norm == 1.0);

    REQUIRE(dmorse_state_normalize(st.s) == DMORSE_OK);
    REQUIRE(dmorse_state_info(st.s, &E, &w1, &w2, &norm) == DMORSE_OK);
    CHECK(norm > 0.0);
    CHECK(norm != 1.0);

    const int count = 513;
    std::vector<double> r(count), s(count), v(count), vn(count);
    REQUIRE(dmorse_state_sample(st.s, 0.3, 6.0, count, r.data(), s.data(),
                                v.data(), vn.data()) == DMORSE_OK);
    for (int i = 0; i < count; ++i) {
        CHECK(s[i] == doctest::Approx(std::exp(-1.2 * (r[i] - 1.4)))
                          .epsilon(1e-12));
        CHECK(vn[i] == doctest::Approx(v[i] * norm).epsilon(1e-12));
    }

    dmorse_shoot_result shot;
    REQUIRE(dmorse_shoot(h.p, 0, domain[0].lo > 0.0 ? domain[0].lo : 0.0,
                         domain[nd - 1].hi, 0, 1, &shot) == DMORSE_OK);
    CHECK(shot.converged == 1);
    CHECK(shot.nodes == 0);
    CHECK(std::fabs(shot.energy - roots[0].energy) /
              std::fabs(roots[0].energy) <
          1e-6);

    double pek = -1.0;
    REQUIRE(dmorse_pekeris_error(h.p, 0, domain[0].lo > 0.0 ? domain[0].lo
                                                            : 0.0,
                                 domain[nd - 1].hi, 0, &pek) == DMORSE_OK);
    CHECK(pek >= 0.0);
}

TEST_CASE("empty domain surfaces as a status code") {
    ProblemHandle h;
    REQUIRE(dmorse_problem_create(DMORSE_MODE_PDM, 11.2256, 1.1283, 2.59441,
                                  6.8606719, 0.0, -1, &h.p) == DMORSE_OK);
    dmorse_root roots[4];
    int nr = 0;
    CHECK(dmorse_solve(h.p, 1, nullptr, roots, 4, &nr) ==
          DMORSE_ERR_EMPTY_DOMAIN);
    CHECK(nr == 0);
}

TEST_CASE("convention scan through the C surface") {
    dmorse_preset co;
    REQUIRE(dmorse_preset_co(&co) == DMORSE_OK);
    dmorse_scan_entry entries[DMORSE_SCAN_ENTRY_COUNT];
    int count = 0;
    int best = -2;
    double best_dev = -2.0;
    REQUIRE(dmorse_scan_conventions(&co, entries, DMORSE_SCAN_ENTRY_COUNT,
                                    &count, &best, &best_dev) == DMORSE_OK);
    CHECK(count == DMORSE_SCAN_ENTRY_COUNT);
    for (int i = 0; i < count; ++i) {
        CHECK(entries[i].target_abs_energy > 6.0);
        CHECK(entries[i].kappa == -(entries[i].row + 1));
        if (entries[i].status == DMORSE_SCAN_MATCHED)
            CHECK(entries[i].rel_deviation < 1e-3);
    }
    // the quoted constants match no convention; best reports that honestly
    CHECK(best == -1);
}
