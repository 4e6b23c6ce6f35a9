#include "nu_core.hpp"

#include <cmath>

#include "special_functions.hpp"

namespace dmorse {

namespace {

bool all_finite(const NuInput& in) {
    return std::isfinite(in.alpha1) && std::isfinite(in.alpha2) &&
           std::isfinite(in.alpha3) && std::isfinite(in.xi1) &&
           std::isfinite(in.xi2) && std::isfinite(in.xi3);
}

} // namespace

NuDerived derive_parameters(const NuInput& in) {
    if (!all_finite(in))
        fail(errc::invalid_argument, "derive_parameters: non-finite input");

    NuDerived d;
    d.alpha4 = 0.5 * (1.0 - in.alpha1);
    d.alpha5 = 0.5 * (in.alpha2 - 2.0 * in.alpha3);
    d.alpha6 = d.alpha5 * d.alpha5 + in.xi1;
    d.alpha7 = 2.0 * d.alpha4 * d.alpha5 - in.xi2;
    d.alpha8 = d.alpha4 * d.alpha4 + in.xi3;
    if (d.alpha8 < 0.0)
        fail(errc::negative_discriminant_alpha8,
             "derive_parameters: alpha4^2 + xi3 is negative");
    d.alpha9 = in.alpha3 * d.alpha7 + in.alpha3 * in.alpha3 * d.alpha8 +
               d.alpha6;
    if (d.alpha9 < 0.0)
        fail(errc::negative_discriminant_alpha9,
             "derive_parameters: alpha3 alpha7 + alpha3^2 alpha8 + alpha6 "
             "is negative");

    const double r8 = std::sqrt(d.alpha8);
    const double r9 = std::sqrt(d.alpha9);
    d.alpha10 = in.alpha1 + 2.0 * d.alpha4 + 2.0 * r8;
    d.alpha11 = in.alpha2 - 2.0 * d.alpha5 + 2.0 * (r9 + in.alpha3 * r8);
    d.alpha12 = d.alpha4 + r8;
    d.alpha13 = d.alpha5 - (r9 + in.alpha3 * r8);
    return d;
}

double eigen_residual_general(const NuDerived& d, const NuInput& in, int n) {
    if (n < 0)
        fail(errc::invalid_argument, "eigen_residual_general: n < 0");
    if (in.alpha3 == 0.0)
        fail(errc::wrong_branch,
             "eigen_residual_general: requires alpha3 != 0");
    const double r8 = std::sqrt(d.alpha8);
    const double r9 = std::sqrt(d.alpha9);
    const double np = static_cast<double>(n);
    return in.alpha2 * np - (2.0 * np + 1.0) * d.alpha5 +
           (2.0 * np + 1.0) * (r9 + in.alpha3 * r8) +
           np * (np - 1.0) * in.alpha3 + d.alpha7 +
           2.0 * in.alpha3 * d.alpha8 + 2.0 * r8 * r9;
}

double eigen_residual_degenerate(const NuDerived& d, const NuInput& in,
                                 int n) {
    if (n < 0)
        fail(errc::invalid_argument, "eigen_residual_degenerate: n < 0");
    if (in.alpha3 != 0.0)
        fail(errc::wrong_branch,
             "eigen_residual_degenerate: requires alpha3 == 0");
    const double r8 = std::sqrt(d.alpha8);
    const double r9 = std::sqrt(d.alpha9);
    const double np = static_cast<double>(n);
    return in.alpha2 * np - 2.0 * d.alpha5 * np + (2.0 * np + 1.0) * r9 +
           d.alpha7 - 2.0 * r8 * r9 + d.alpha5;
}

double eigenfunction_general(const NuDerived& d, const NuInput& in, int n,
                             double s) {
    if (n < 0)
        fail(errc::invalid_argument, "eigenfunction_general: n < 0");
    if (in.alpha3 == 0.0)
        fail(errc::wrong_branch, "eigenfunction_general: requires alpha3 != 0");
    if (!(s > 0.0) || !(in.alpha3 * s < 1.0))
        fail(errc::domain_error,
             "eigenfunction_general: s outside (0, 1/alpha3)");
    const double one_minus = 1.0 - in.alpha3 * s;
    const double expo = -d.alpha12 - d.alpha13 / in.alpha3;
    const double poly = jacobi(n, d.alpha10 - 1.0,
                               d.alpha11 / in.alpha3 - d.alpha10 - 1.0,
                               1.0 - 2.0 * in.alpha3 * s);
    return std::pow(s, d.alpha12) * std::pow(one_minus, expo) * poly;
}

double eigenfunction_degenerate(const NuDerived& d, int n, double s) {
    if (n < 0)
        fail(errc::invalid_argument, "eigenfunction_degenerate: n < 0");
    if (!(s >= 0.0))
        fail(errc::domain_error, "eigenfunction_degenerate: s must be >= 0");
    if (d.alpha13 >= 0.0)
        fail(errc::non_decaying_boundary,
             "eigenfunction_degenerate: alpha13 must be negative for decay");
    const double power = (s == 0.0 && d.alpha12 == 0.0)
                             ? 1.0
                             : std::pow(s, d.alpha12);
    return power * std::exp(d.alpha13 * s) *
           laguerre(n, d.alpha10 - 1.0, d.alpha11 * s);
}

} // namespace dmorse
