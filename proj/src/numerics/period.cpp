#include "hmsphere/period.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hmsphere/errors.hpp"
#include "hmsphere/limits.hpp"
#include "hmsphere/potential.hpp"

namespace hmsphere {
namespace {

using std::numbers::pi;

// q is known only to ~eps * C in absolute terms, so relative accuracy of the
// integrand degrades like eps * C / (C - c0) as C approaches c0.
double conditioned_tolerance(const PeriodKernel& kernel, double tol) {
    const double c = kernel.c();
    const double gap = c - kernel.critical().c0;
    const double floor = 16.0 * std::numeric_limits<double>::epsilon() * c / gap;
    return std::max(tol, floor);
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

PeriodKernel::PeriodKernel(const Params& params, double c)
    : PeriodKernel(params, critical_data(params), c) {}

PeriodKernel::PeriodKernel(const Params& params, const CriticalData& crit, double c)
    : params_(validate(params)), crit_(crit), roots_(find_roots(params, crit, c)),
      sqrt_c_(std::sqrt(c)) {}

PeriodKernel::Node PeriodKernel::at(double phi) const {
    const double half = 0.5 * (roots_.t2 - roots_.t1);
    const double s = std::sin(0.5 * phi);
    const double co = std::cos(0.5 * phi);
    const double d1 = 2.0 * half * s * s;    // t - t1
    const double d2 = 2.0 * half * co * co;  // t2 - t
    Node node;
    double q;
    if (phi <= 0.5 * pi) {
        node.t = roots_.t1 + d1;
        q = -potential_difference(roots_.t1, d1, params_);
    } else {
        node.t = roots_.t2 - d2;
        q = -potential_difference(roots_.t2, -d2, params_);
    }
    node.h = q / (d1 * d2);
    return node;
}

double PeriodKernel::angle_speed(double t) const {
    return sqrt_c_ * t * curvature_factor(t, params_) / (roots_.c - t * t);
}

double PeriodKernel::theta_density(double phi) const {
    const Node node = at(phi);
    return angle_speed(node.t) / std::sqrt(node.h);
}

double PeriodKernel::arclength_density(double phi) const {
    return 1.0 / std::sqrt(at(phi).h);
}

double PeriodKernel::h_limit_t1() const {
    return q_prime(roots_.t1, params_) / (roots_.t2 - roots_.t1);
}

double PeriodKernel::h_limit_t2() const {
    return -q_prime(roots_.t2, params_) / (roots_.t2 - roots_.t1);
}

PeriodResult period(const PeriodKernel& kernel, double tol) {
    const double eff = conditioned_tolerance(kernel, tol);
    const QuadratureResult q =
        angle_integral([&](double phi) { return 2.0 * kernel.theta_density(phi); }, eff);
    return {q.value, q.err_estimate, q.nodes, eff};
}

PeriodResult period(const Params& params, double c, double tol) {
    return period(PeriodKernel(params, c), tol);
}

PeriodResult half_period(const PeriodKernel& kernel, double tol) {
    const double eff = conditioned_tolerance(kernel, tol);
    const QuadratureResult q =
        angle_integral([&](double phi) { return kernel.arclength_density(phi); }, eff);
    return {q.value, q.err_estimate, q.nodes, eff};
}

PeriodResult half_period(const Params& params, double c, double tol) {
    return half_period(PeriodKernel(params, c), tol);
}

SolveResult solve_period_equation(const Params& params, int k, double tol,
                                  const SolveOptions& options) {
    const Params p = validate(params);
    if (!(tol > 0.0)) {
        throw DomainError("solve_period_equation: tolerance must be positive");
    }
    const Bracket b = bracket_endpoints(p.n, p.m, k);
    if (b.empty()) {
        throw BracketError("no admissible H_m for k = " + std::to_string(k) +
                           ": h_low = " + format_double(b.h_low) +
                           " is not below h_high = " + format_double(b.h_high));
    }
    if (!(p.h_m > b.h_low)) {
        throw BracketError("h_m = " + format_double(p.h_m) + " must exceed h_low = " +
                           format_double(b.h_low) + " for k = " + std::to_string(k));
    }
    if (!(p.h_m < b.h_high)) {
        throw BracketError("h_m = " + format_double(p.h_m) + " must be below h_high = " +
                           format_double(b.h_high) + " for k = " + std::to_string(k));
    }

    const CriticalData crit = critical_data(p);
    const double target = 2.0 * pi / k;
    const double quad_tol = std::clamp(0.01 * tol, 1e-14, kDefaultQuadratureTol);

    SolveResult out;
    out.k = k;
    auto evaluate = [&](double c) {
        ++out.iterations;
        return period(PeriodKernel(p, crit, c), quad_tol);
    };
    auto accept = [&](double c, const PeriodResult& r) {
        out.c_star = c;
        out.p_achieved = r.value;
        out.err_estimate = r.err_estimate;
        out.nodes = r.nodes;
        return out;
    };

    double c_prev = crit.c0 * (1.0 + options.start_offset);
    PeriodResult r_prev = evaluate(c_prev);
    double p_min = r_prev.value;
    double p_max = r_prev.value;
    if (std::abs(r_prev.value - target) <= tol) return accept(c_prev, r_prev);

    for (int j = 1; j <= options.scan_steps; ++j) {
        const double c_next = c_prev * options.scan_ratio;
        const PeriodResult r_next = evaluate(c_next);
        p_min = std::min(p_min, r_next.value);
        p_max = std::max(p_max, r_next.value);
        if (std::abs(r_next.value - target) <= tol) return accept(c_next, r_next);

        if ((r_prev.value - target) * (r_next.value - target) < 0.0) {
            double lo = c_prev;
            double hi = c_next;
            double f_lo = r_prev.value - target;
            for (int it = 0; it < options.max_bisections; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (!(mid > lo && mid < hi)) break;
                const PeriodResult r_mid = evaluate(mid);
                const double f_mid = r_mid.value - target;
                if (std::abs(f_mid) <= tol) return accept(mid, r_mid);
                if (f_lo * f_mid < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = f_mid;
                }
            }
            throw ConvergenceError("solve_period_equation: bisection stalled in C = [" +
                                   format_double(lo) + ", " + format_double(hi) +
                                   "] before |P - 2pi/k| <= " + format_double(tol));
        }
        c_prev = c_next;
        r_prev = r_next;
    }
    throw ConvergenceError("solve_period_equation: no sign change of P - 2pi/k (2pi/k = " +
                           format_double(target) + ") over scanned P range [" +
                           format_double(p_min) + ", " + format_double(p_max) + "]");
}

}  // namespace hmsphere
