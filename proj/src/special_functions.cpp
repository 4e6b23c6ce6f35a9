#include "special_functions.hpp"

#include <cmath>
#include <limits>

namespace dmorse {

double laguerre(int n, double a, double x) {
    if (n < 0)
        fail(errc::invalid_argument, "laguerre: order must be nonnegative");
    if (!(a > -1.0))
        fail(errc::invalid_argument, "laguerre: parameter must exceed -1");
    if (n == 0)
        return 1.0;
    double lkm1 = 1.0;          // L_0
    double lk = 1.0 + a - x;    // L_1
    for (int k = 1; k < n; ++k) {
        const double lkp1 =
            ((2.0 * k + 1.0 + a - x) * lk - (k + a) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double jacobi(int n, double a, double b, double x) {
    if (n < 0)
        fail(errc::invalid_argument, "jacobi: order must be nonnegative");
    if (!(a > -1.0) || !(b > -1.0))
        fail(errc::invalid_argument, "jacobi: parameters must exceed -1");
    if (n == 0)
        return 1.0;
    double pkm1 = 1.0;                                  // P_0
    double pk = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x; // P_1
    for (int k = 2; k <= n; ++k) {
        const double c = 2.0 * k + a + b;
        const double denom = 2.0 * k * (k + a + b) * (c - 2.0);
        const double c1 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
        const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
        const double pkp1 = (c1 * pk - c2 * pkm1) / denom;
        pkm1 = pk;
        pk = pkp1;
    }
    return pk;
}

QuadratureSpec::QuadratureSpec(double lo_, double hi_, int panels_)
    : scheme(QuadratureScheme::gauss_legendre_15), lo(lo_), hi(hi_),
      panels(panels_) {
    if (!(lo < hi))
        fail(errc::invalid_argument, "quadrature: lo must be below hi");
    if (panels < 2)
        fail(errc::invalid_argument, "quadrature: need at least 2 panels");
}

namespace {

// 15-point Gauss-Legendre rule on [-1, 1] (positive half; rule is symmetric).
constexpr int kGaussHalf = 8;
constexpr double kGaussNode[kGaussHalf] = {
    0.000000000000000, 0.201194093997435, 0.394151347077563,
    0.570972172608539, 0.724417731360170, 0.848206583410427,
    0.937273392400706, 0.987992518020485,
};
constexpr double kGaussWeight[kGaussHalf] = {
    0.202578241925561, 0.198431485327112, 0.186161000015562,
    0.166269205816994, 0.139570677926154, 0.107159220467172,
    0.070366047488108, 0.030753241996117,
};

double gauss_panels(const std::function<double(double)>& f, double lo,
                    double hi, int panels) {
    const double h = (hi - lo) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * h;
        const double half = 0.5 * h;
        double acc = kGaussWeight[0] * f(mid);
        for (int i = 1; i < kGaussHalf; ++i) {
            const double dx = half * kGaussNode[i];
            acc += kGaussWeight[i] * (f(mid - dx) + f(mid + dx));
        }
        if (!std::isfinite(acc))
            fail(errc::non_finite, "quadrature: integrand not finite");
        total += acc * half;
    }
    return total;
}

} // namespace

IntegralResult integrate(const std::function<double(double)>& f,
                         const QuadratureSpec& spec) {
    if (!(spec.lo < spec.hi) || spec.panels < 2)
        fail(errc::invalid_argument, "quadrature: bad spec");
    const double full = gauss_panels(f, spec.lo, spec.hi, spec.panels);
    const double coarse = gauss_panels(f, spec.lo, spec.hi, spec.panels / 2);
    return {full, std::fabs(full - coarse)};
}

IntegralResult integrate_to_infinity(const std::function<double(double)>& f,
                                     double lo, int panels,
                                     double initial_scale) {
    if (!(initial_scale > 0.0))
        fail(errc::invalid_argument, "quadrature: bad probe scale");
    // Probe staggered points so an isolated zero of f cannot end the search.
    const double floor = 1e-300;
    double span = initial_scale;
    bool found = false;
    for (int iter = 0; iter < 1200 && !found; ++iter) {
        const double r = lo + span;
        double biggest = 0.0;
        for (double frac : {1.0, 1.0137, 1.0563}) {
            const double v = f(lo + span * frac);
            if (!std::isfinite(v))
                fail(errc::non_finite, "quadrature: integrand not finite");
            biggest = std::max(biggest, std::fabs(v));
        }
        if (biggest < floor && r > lo + initial_scale)
            found = true;
        else
            span *= 1.25;
    }
    if (!found)
        fail(errc::domain_error, "quadrature: integrand does not decay");
    return integrate(f, QuadratureSpec(lo, lo + span, panels));
}

} // namespace dmorse
