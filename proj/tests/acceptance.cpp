// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hmsphere/critical.hpp"
#include "hmsphere/errors.hpp"
#include "hmsphere/identities.hpp"
#include "hmsphere/limits.hpp"
#include "hmsphere/period.hpp"
#include "hmsphere/potential.hpp"
#include "hmsphere/profile.hpp"
#include "hmsphere/reference.hpp"
#include "hmsphere/roots.hpp"

using namespace hmsphere;
using std::numbers::pi;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

template <class F>
void grid(F&& f) {
    for (int k = 2; k <= 10; ++k) {
        for (int n = 2; n <= 12; ++n) {
            for (int m = 1; m <= std::min(6, n - 1); ++m) f(n, m, k);
        }
    }
}

Outcome endpoint_identity() {
    double worst = 0.0;
    int cases = 0;
    grid([&](int n, int m, int k) {
        const Bracket b = bracket_endpoints(n, m, k);
        const double target = 2 * pi / k;
        worst = std::max(worst, std::abs(limit_at_infinity(b.h_low, m) - target) / target);
        worst = std::max(worst, std::abs(limit_at_c0(Params{n, m, b.h_high}) - target) / target);
        ++cases;
    });
    return {worst <= 1e-10, fmt("%.0f (n,m,k); max rel err %.2e", cases, worst)};
}

Outcome specialization() {
    double worst = 0.0;
    int cases = 0;
    grid([&](int n, int m, int k) {
        const double kk = k;
        double closed = 0.0;
        if (m == 1) closed = (kk * kk - 2) * std::sqrt(n - 1.0) / (n * std::sqrt(kk * kk - 1));
        else if (m == 2) closed = (kk * kk - 2) / n;
        else if (m == 4 && n > 4) closed = (std::pow(kk, 4) - 4) / (n * (n - 4.0));
        else return;
        const double general = bracket_endpoints(n, m, k).h_high;
        worst = std::max(worst, std::abs(general - closed) / closed);
        ++cases;
    });
    return {worst <= 1e-12, fmt("%.0f cases; max rel err %.2e", cases, worst)};
}

Outcome identities() {
    IdentityOptions opt;
    opt.sample_count = 199;  // plus the base instance: 200
    opt.seed = 2024;
    const IdentityReport report = evaluate_identities({3, 2, 1.0}, opt);
    double worst = 0.0;
    for (const auto& c : report.checks) worst = std::max(worst, c.max_residual);
    std::string detail = fmt("%.0f instances; max residual %.2e", report.checks.front().evaluations, worst);
    if (!report.all_passed()) detail += "; failed: " + report.failures();
    return {report.all_passed() && worst <= 1e-9, detail};
}

Outcome reference_instance() {
    const Params p{3, 2, 1.0};
    const CriticalData c = critical_data(p);
    const double b = limit_at_c0(p, c);
    const double unreduced = limit_at_c0_unreduced(p, c);
    const double e = std::max({std::abs(c.f0 - std::sqrt(5.0)), std::abs(c.v0 - std::pow(4.0, -1.0 / 3.0)),
                               std::abs(c.c0 - 2.3811015779522992121), std::abs(c.a - 6.0),
                               std::abs(b - 2 * pi / std::sqrt(5.0))});
    const double form = std::abs(unreduced - b);
    return {e <= 1e-9 && form <= 1e-10, fmt("max err %.2e; B forms differ by %.2e", e, form)};
}

Outcome root_finder() {
    const RootPair r = find_roots({3, 2, 1.0}, 3.0);
    const double e = std::max(std::abs(r.t1 - (std::sqrt(3.0) - 1.0) / 2.0), std::abs(r.t2 - 1.0));
    return {e <= 1e-12, fmt("t1 = %.16g, t2 = %.16g, err %.2e", r.t1, r.t2, e)};
}

Outcome limit_convergence() {
    const Params p{3, 2, 1.0};
    const CriticalData c = critical_data(p);
    const Limits lim = limits(p);
    const double near = std::abs(period(p, c.c0 * (1.0 + 1e-6)).value - lim.b_val);
    const double far = std::abs(period(p, 1e8).value - lim.a_val);
    bool monotone = true;
    double previous = INFINITY;
    for (int j = 2; j <= 6; ++j) {
        const double e = std::abs(period(p, c.c0 * (1.0 + std::pow(10.0, -j))).value - lim.b_val);
        monotone = monotone && e < previous;
        previous = e;
    }
    return {near <= 1e-3 && far <= 1e-3 && monotone,
            fmt("|P - B| = %.2e, |P - A| = %.2e, monotone %.0f", near, far, monotone ? 1.0 : 0.0)};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    double slowest = 0.0;
    for (int i = 0; i < 10; ++i) {
        const int n = std::uniform_int_distribution<int>(2, 12)(rng);
        const int m = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const Params p{n, m, std::exp(std::log(0.01) + unit(rng) * std::log(1e4))};
        const double c = critical_data(p).c0 * (1.0 + std::exp(std::log(1e-3) + unit(rng) * std::log(1e6)));
        const auto start = Clock::now();
        const double fast = period(p, c).value;
        slowest = std::max(slowest, ms_since(start));
        const double slow = reference::period(p, c);
        worst = std::max(worst, std::abs(fast - slow) / std::abs(slow));
    }
    return {worst <= 1e-8 && slowest <= 50.0, fmt("max rel diff %.2e; slowest evaluation %.3f ms", worst, slowest)};
}

Outcome existence_pipeline() {
    const Params p{3, 2, 1.0};
    const auto start = Clock::now();
    const SolveResult s = solve_period_equation(p, 3);
    const double elapsed = ms_since(start);
    const double perr = std::abs(s.p_achieved - 2 * pi / 3);
    const Profile prof = generate_profile(p, s.c_star, 3);
    const double closure = std::abs(prof.samples.back().theta - 2 * pi);
    const PointCloud cloud = embed_points(prof, 16);
    double norm = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        double sq = 0.0;
        for (double x : cloud.point(i)) sq += x * x;
        norm = std::max(norm, std::abs(sq - 1.0));
    }
    return {perr <= 1e-10 && elapsed < 1000.0 && closure <= 1e-6 && norm <= 1e-12,
            fmt("|P - 2pi/3| = %.2e in %.1f ms; closure %.2e", perr, elapsed, closure) +
                fmt("; max | |x|^2 - 1 | = %.2e", norm)};
}

Outcome bracket_enforcement() {
    std::mt19937_64 rng(9);
    int rejected = 0;
    int attempts = 0;
    for (int i = 0; i < 20; ++i) {
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        const int m = std::uniform_int_distribution<int>(1, std::min(6, n - 1))(rng);
        const int k = std::uniform_int_distribution<int>(3, 10)(rng);
        const Bracket b = bracket_endpoints(n, m, k);
        for (double h : {0.5 * b.h_low, 2.0 * b.h_high}) {
            ++attempts;
            try {
                solve_period_equation({n, m, h}, k);
            } catch (const BracketError&) {
                ++rejected;
            }
        }
    }
    return {rejected == attempts, fmt("%.0f of %.0f out-of-bracket values rejected", rejected, attempts)};
}

Outcome q_structure() {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double max_qpp = -INFINITY;
    double max_stationary = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int n = std::uniform_int_distribution<int>(2, 12)(rng);
        const int m = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const Params p{n, m, std::exp(std::log(0.01) + unit(rng) * std::log(1e4))};
        for (int j = 0; j <= 600; ++j) {
            max_qpp = std::max(max_qpp, q_double_prime(std::pow(10.0, -3.0 + 6.0 * j / 600.0), p));
        }
        max_stationary = std::max(max_stationary, std::abs(q_prime(critical_data(p).v0, p)));
    }
    return {max_qpp < -2.0 && max_stationary <= 1e-10,
            fmt("max q'' = %.6f; max |q'(v0)| = %.2e", max_qpp, max_stationary)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"endpoint identity", endpoint_identity},
        {"specialization consistency", specialization},
        {"algebraic identities", identities},
        {"reference instance", reference_instance},
        {"root finder", root_finder},
        {"limit convergence", limit_convergence},
        {"quadrature oracle equivalence", oracle_equivalence},
        {"existence pipeline", existence_pipeline},
        {"bracket enforcement", bracket_enforcement},
        {"structural q-properties", q_structure},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.passed) ++failed;
        std::printf("[%s] %2d %-30s %s\n", o.passed ? "PASS" : "FAIL", index, name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
