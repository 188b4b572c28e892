#include "hmsphere/roots.hpp"

#include <cmath>
#include <sstream>

#include "hmsphere/errors.hpp"
#include "hmsphere/potential.hpp"

namespace hmsphere {
namespace {

// `inside` has q > 0, `outside` has q <= 0.
double refine_root(const Params& p, double c, double inside, double outside) {
    double lo = inside;
    double hi = outside;
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (std::abs(hi - lo) <= 1e-13 * std::abs(mid)) break;
        if (q_eval(mid, c, p) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double t = 0.5 * (lo + hi);
    double residual = std::abs(q_eval(t, c, p));
    const double left = std::min(inside, outside);
    const double right = std::max(inside, outside);
    for (int it = 0; it < 3; ++it) {
        const double slope = q_prime(t, p);
        if (slope == 0.0 || !std::isfinite(slope)) break;
        const double next = t - q_eval(t, c, p) / slope;
        if (!(next > left && next < right)) break;
        const double next_residual = std::abs(q_eval(next, c, p));
        if (!(next_residual < residual)) break;
        t = next;
        residual = next_residual;
    }
    return t;
}

}  // namespace

RootPair find_roots(const Params& params, const CriticalData& crit, double c) {
    const Params p = validate(params);
    if (!(c > crit.c0) || !(q_eval(crit.v0, c, p) > 0.0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "find_roots: C must exceed c0 = " << crit.c0 << " (got C = " << c << ")";
        throw DomainError(msg.str());
    }

    double lower = crit.v0;
    double lower_inside = crit.v0;
    for (int it = 0; q_eval(lower, c, p) > 0.0; ++it) {
        lower_inside = lower;
        lower *= 0.5;
        if (it > 1100 || !(lower > 0.0)) {
            throw ConvergenceError("find_roots: could not bracket t1");
        }
    }
    double upper = crit.v0;
    double upper_inside = crit.v0;
    for (int it = 0; q_eval(upper, c, p) > 0.0; ++it) {
        upper_inside = upper;
        upper *= 2.0;
        if (it > 1100 || !std::isfinite(upper)) {
            throw ConvergenceError("find_roots: could not bracket t2");
        }
    }

    RootPair roots;
    roots.c = c;
    roots.t1 = refine_root(p, c, lower_inside, lower);
    roots.t2 = refine_root(p, c, upper_inside, upper);
    return roots;
}

RootPair find_roots(const Params& params, double c) {
    return find_roots(params, critical_data(params), c);
}

}  // namespace hmsphere
