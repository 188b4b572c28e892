#include "hmsphere/critical.hpp"

#include <algorithm>
#include <cmath>

#include "hmsphere/errors.hpp"
#include "hmsphere/potential.hpp"

namespace hmsphere {
namespace {

double critical_equation_slope(double u, const Params& p) {
    const double n = p.n;
    const double m = p.m;
    return 0.5 * m * std::pow(u, (m - 4.0) / 2.0) * ((n - m) * u - (m - 2.0));
}

}  // namespace

double critical_equation(double u, const Params& params) {
    const double n = params.n;
    const double m = params.m;
    return (n - m) * std::pow(u, m / 2.0) - m * std::pow(u, (m - 2.0) / 2.0) - n * params.h_m;
}

CriticalData critical_data(const Params& params) {
    const Params p = validate(params);
    const double n = p.n;
    const double m = p.m;

    // The left end of the monotone branch; the equation is negative there.
    const double lower = std::max((m - 2.0) / (n - m), 0.0);
    double lo = lower;
    double hi = std::max(2.0 * lower, 1.0);
    int grow = 0;
    while (critical_equation(hi, p) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++grow > 2000 || !std::isfinite(hi)) {
            throw ConvergenceError("critical_data: could not bracket F0^2");
        }
    }

    for (int it = 0; it < 400 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (critical_equation(mid, p) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double slope = critical_equation_slope(u, p);
        if (!(slope > 0.0)) break;
        const double next = u - critical_equation(u, p) / slope;
        if (!(next > lower) || !std::isfinite(next)) break;
        u = next;
    }

    CriticalData out;
    out.f0 = std::sqrt(u);
    // v0^-n = F0^m - H_m, rewritten through the critical condition to avoid cancellation.
    const double base = (m / n) * (std::pow(out.f0, m) + std::pow(out.f0, m - 2.0));
    out.v0 = std::pow(base, -1.0 / n);
    out.c0 = out.v0 * out.v0 * (u + 1.0);
    out.a = -0.5 * q_double_prime(out.v0, p);
    return out;
}

}  // namespace hmsphere
