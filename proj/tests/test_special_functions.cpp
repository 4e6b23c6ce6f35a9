#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "special_functions.hpp"

using namespace dmorse;

TEST_CASE("laguerre base cases") {
    CHECK(laguerre(0, 0.7, 3.1) == 1.0);
    CHECK(laguerre(0, 2.0, -5.0) == 1.0);
    CHECK(laguerre(1, 2.0, 3.0) == doctest::Approx(0.0).epsilon(1e-14));
    // explicit quadratic: (a+1)(a+2)/2 - (a+2)x + x^2/2
    CHECK(laguerre(2, 1.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("laguerre matches explicit low orders at random points") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> xdist(0.0, 20.0);
    std::uniform_real_distribution<double> adist(-0.9, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double x = xdist(rng);
        const double a = adist(rng);
        const double l1 = 1.0 + a - x;
        const double l2 = 0.5 * (a + 1.0) * (a + 2.0) - (a + 2.0) * x +
                          0.5 * x * x;
        CHECK(laguerre(1, a, x) == doctest::Approx(l1).epsilon(1e-12));
        CHECK(laguerre(2, a, x) == doctest::Approx(l2).epsilon(1e-12));
    }
}

TEST_CASE("laguerre derivative identity d/dx L_n^a = -L_{n-1}^{a+1}") {
    const double h = 1e-5;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xdist(0.1, 12.0);
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i < 50; ++i) {
            const double a = 0.5 + 0.25 * n;
            const double x = xdist(rng);
            const double fd =
                (laguerre(n, a, x + h) - laguerre(n, a, x - h)) / (2.0 * h);
            const double exact = -laguerre(n - 1, a + 1.0, x);
            CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
        }
    }
}

TEST_CASE("jacobi base cases") {
    CHECK(jacobi(0, 0.3, 0.9, 0.5) == 1.0);
    CHECK(jacobi(1, 1.0, 1.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("jacobi first order matches ((a-b) + (a+b+2)x)/2") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> pd(-0.9, 3.0);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = pd(rng), b = pd(rng), x = xd(rng);
        const double expected = 0.5 * ((a - b) + (a + b + 2.0) * x);
        CHECK(jacobi(1, a, b, x) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("jacobi endpoint value P_n^(a,b)(1) = C(n+a, n)") {
    const auto binom = [](int top, int k) {
        double v = 1.0;
        for (int i = 1; i <= k; ++i)
            v *= static_cast<double>(top - k + i) / i;
        return v;
    };
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 2; ++b) {
            for (int n = 0; n <= 6; ++n) {
                CHECK(jacobi(n, a, b, 1.0) ==
                      doctest::Approx(binom(n + a, n)).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("integrate: exact on constants and known integrals") {
    const auto one = [](double) { return 1.0; };
    const IntegralResult unit = integrate(one, QuadratureSpec(0.0, 1.0, 16));
    CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-15));

    const auto decaying = [](double x) { return std::exp(-x); };
    const IntegralResult expo = integrate_to_infinity(decaying, 0.0);
    CHECK(std::fabs(expo.value - 1.0) < 1e-10);

    const auto gamma3 = [](double x) { return x * x * std::exp(-x); };
    const IntegralResult g3 = integrate_to_infinity(gamma3, 0.0);
    CHECK(std::fabs(g3.value - 2.0) < 1e-8);
}

TEST_CASE("integrate: error estimate brackets the truth for a smooth case") {
    const auto f = [](double x) { return std::sin(3.0 * x) + 2.0; };
    const IntegralResult r = integrate(f, QuadratureSpec(0.0, 2.0, 64));
    const double exact = (std::cos(0.0) - std::cos(6.0)) / 3.0 + 4.0;
    CHECK(std::fabs(r.value - exact) < 1e-12);
    CHECK(r.error_estimate < 1e-10);
}

TEST_CASE("integrate rejects non-finite integrands") {
    const auto nan_past_half = [](double x) {
        return x > 0.5 ? std::nan("") : 1.0;
    };
    bool threw = false;
    try {
        integrate(nan_past_half, QuadratureSpec(0.0, 1.0, 8));
    } catch (const solver_error& e) {
        threw = e.code() == errc::non_finite;
    }
    CHECK(threw);
}

TEST_CASE("laguerre orthogonality under the quadrature") {
    // a = 0.5 uses x = t^2 so the weight is smooth at the origin.
    for (double a : {0.5, 1.0, 2.0}) {
        for (int m = 0; m <= 6; ++m) {
            for (int n = m; n <= 6; ++n) {
                const auto f = [&](double t) {
                    const double x = (a == 0.5) ? t * t : t;
                    const double jac = (a == 0.5) ? 2.0 * t : 1.0;
                    return jac * std::pow(x, a) * std::exp(-x) *
                           laguerre(m, a, x) * laguerre(n, a, x);
                };
                const IntegralResult r =
                    integrate_to_infinity(f, 0.0, 8192, 1.0);
                if (m == n) {
                    CHECK(r.value > 0.0);
                } else {
                    const double scale = std::tgamma(n + a + 1.0) /
                                         std::tgamma(n + 1.0);
                    CHECK(std::fabs(r.value) < 1e-8 * std::max(1.0, scale));
                }
            }
        }
    }
}
