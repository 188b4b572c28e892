#include "hmsphere/reference.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <functional>
#include <vector>

#include "hmsphere/critical.hpp"
#include "hmsphere/errors.hpp"
#include "hmsphere/potential.hpp"

namespace hmsphere::reference {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

double solve_bracketed(const std::function<double(double)>& f, double a, double b) {
    boost::math::tools::eps_tolerance<double> tol(52);
    std::uintmax_t max_iter = 500;
    const auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, tol, max_iter);
    return 0.5 * (lo + hi);
}

double segment(const std::function<double(double)>& f, double a, double b, double tol) {
    return Kronrod::integrate(f, a, b, 8, tol);
}

// Integral of f over [t1 + d1, t2 - d2] for decreasing insets, accumulated
// shell by shell, then extrapolated to d = 0. Near t1 the integrand varies on
// the scale of t1 itself and near t2 on the distance to the pole at sqrt(C),
// so each end gets its own inset scale.
double inset_extrapolated(const std::function<double(double)>& f, double t1, double t2, double c,
                          const InsetOptions& opt) {
    const double width = t2 - t1;
    const double left_scale = opt.first_inset * std::min(width, t1);
    const double right_scale = opt.first_inset * std::min(width, std::sqrt(c) - t2);
    auto left_inset = [&](int j) { return left_scale * std::pow(0.25, j); };
    auto right_inset = [&](int j) { return right_scale * std::pow(0.25, j); };

    std::vector<double> values(static_cast<std::size_t>(opt.levels));
    const double mid = 0.5 * (t1 + t2);
    // Core, split so the near-singular ends are graded.
    double core = 0.0;
    {
        std::vector<double> left{t1 + left_inset(0)};
        while (left.back() - t1 < 0.25 * width) left.push_back(t1 + 2.0 * (left.back() - t1));
        left.back() = mid;
        for (std::size_t i = 1; i < left.size(); ++i) core += segment(f, left[i - 1], left[i], opt.segment_tol);
        std::vector<double> right{t2 - right_inset(0)};
        while (t2 - right.back() < 0.25 * width) right.push_back(t2 - 2.0 * (t2 - right.back()));
        right.back() = mid;
        for (std::size_t i = 1; i < right.size(); ++i) core += segment(f, right[i], right[i - 1], opt.segment_tol);
    }
    values[0] = core;
    for (int j = 1; j < opt.levels; ++j) {
        values[static_cast<std::size_t>(j)] =
            values[static_cast<std::size_t>(j) - 1] +
            segment(f, t1 + left_inset(j), t1 + left_inset(j - 1), opt.segment_tol) +
            segment(f, t2 - right_inset(j - 1), t2 - right_inset(j), opt.segment_tol);
    }

    // I(d) = I - c1 d^(1/2) - c3 d^(3/2) - ...; each level removes the next odd power.
    std::vector<std::vector<double>> table(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        table[j].push_back(values[j]);
        for (std::size_t l = 1; l <= j; ++l) {
            const double factor = std::pow(2.0, 2.0 * static_cast<double>(l) - 1.0);
            table[j].push_back((factor * table[j][l - 1] - table[j - 1][l - 1]) / (factor - 1.0));
        }
    }
    return table.back().back();
}

}  // namespace

RootPair roots(const Params& params, double c) {
    const Params p = validate(params);
    const CriticalData crit = critical_data(p);
    if (!(c > crit.c0)) {
        throw DomainError("reference::roots: C must exceed c0");
    }
    auto q = [&](double v) { return q_eval(v, c, p); };
    double lo = crit.v0;
    while (q(lo) > 0.0) lo *= 0.125;
    double hi = crit.v0;
    while (q(hi) > 0.0) hi *= 8.0;
    RootPair out;
    out.c = c;
    out.t1 = solve_bracketed(q, lo, crit.v0);
    out.t2 = solve_bracketed(q, crit.v0, hi);
    return out;
}

double period(const Params& params, double c, const InsetOptions& options) {
    const RootPair r = roots(params, c);
    const double sqrt_c = std::sqrt(c);
    auto f = [&](double t) {
        const double lambda = std::pow(std::pow(t, -params.n) + params.h_m, 1.0 / params.m);
        return 2.0 * sqrt_c * t * lambda / ((c - t * t) * std::sqrt(q_eval(t, c, params)));
    };
    return inset_extrapolated(f, r.t1, r.t2, c, options);
}

double half_period(const Params& params, double c, const InsetOptions& options) {
    const RootPair r = roots(params, c);
    auto f = [&](double t) { return 1.0 / std::sqrt(q_eval(t, c, params)); };
    return inset_extrapolated(f, r.t1, r.t2, c, options);
}

}  // namespace hmsphere::reference
