#include "hmsphere/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hmsphere/critical.hpp"
#include "hmsphere/errors.hpp"
#include "hmsphere/identities.hpp"
#include "hmsphere/limits.hpp"
#include "hmsphere/period.hpp"
#include "hmsphere/potential.hpp"
#include "hmsphere/profile.hpp"
#include "hmsphere/reference.hpp"

namespace hmsphere {
namespace {

using std::numbers::pi;

std::string describe(const Params& p) {
    std::ostringstream os;
    os.precision(6);
    os << "n=" << p.n << " m=" << p.m << " h_m=" << p.h_m;
    return os.str();
}

SuiteCheck bounded(std::string name, double value, double threshold, std::string detail) {
    return {std::move(name), value, threshold, value <= threshold, std::move(detail)};
}

// Checks that do not fit a residual (exceptions, broken monotonicity) fail through here.
SuiteCheck failed(std::string name, double threshold, std::string detail) {
    return {std::move(name), INFINITY, threshold, false, std::move(detail)};
}

SuiteCheck classical_endpoints(int n, int m) {
    double worst = 0.0;
    for (int k = 2; k <= 10; ++k) {
        const auto closed = classical_upper_endpoint(n, m, k);
        const double general = bracket_endpoints(n, m, k).h_high;
        worst = std::max(worst, std::abs(general - *closed) / std::abs(*closed));
    }
    return bounded("classical_endpoint", worst, 1e-12, "k=2..10");
}

SuiteCheck q_structure(int n, int m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> log_h(std::log(0.01), std::log(100.0));
    double worst_curvature = -INFINITY;
    double worst_stationarity = 0.0;
    for (int i = 0; i < 10; ++i) {
        const Params p{n, m, std::exp(log_h(rng))};
        for (int j = 0; j <= 120; ++j) {
            const double v = std::pow(10.0, -3.0 + 6.0 * j / 120.0);
            worst_curvature = std::max(worst_curvature, q_double_prime(v, p) + 2.0);
        }
        const CriticalData crit = critical_data(p);
        worst_stationarity = std::max(worst_stationarity, std::abs(q_prime(crit.v0, p)));
    }
    SuiteCheck check{"q_structure", worst_curvature, 0.0, worst_curvature < 0.0 && worst_stationarity <= 1e-10,
                     ""};
    std::ostringstream os;
    os << "max q''+2 on [1e-3,1e3]; max |q'(v0)| = " << worst_stationarity;
    check.detail = os.str();
    return check;
}

SuiteCheck limit_convergence(int n, int m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> log_h(std::log(0.1), std::log(10.0));
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
        const Params p{n, m, std::exp(log_h(rng))};
        try {
            const CriticalData crit = critical_data(p);
            const Limits lim = limits(p);
            double previous = INFINITY;
            for (int j = 2; j <= 6; ++j) {
                const double c = crit.c0 * (1.0 + std::pow(10.0, -j));
                const double err = std::abs(period(p, c).value - lim.b_val);
                if (!(err < previous)) {
                    return failed("limit_convergence", 1e-3,
                                  "error toward B not decreasing at " + describe(p));
                }
                previous = err;
            }
            const double err_inf = std::abs(period(p, 1e8).value - lim.a_val);
            worst = std::max({worst, previous, err_inf});
        } catch (const Error& e) {
            return failed("limit_convergence", 1e-3, describe(p) + ": " + e.what());
        }
    }
    return bounded("limit_convergence", worst, 1e-3, "|P - B| at c0(1+1e-6), |P - A| at C=1e8");
}

double random_c(const CriticalData& crit, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> log_gap(std::log(1e-2), std::log(1e2));
    return crit.c0 * (1.0 + std::exp(log_gap(rng)));
}

SuiteCheck oracle_equivalence(int n, int m, int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> log_h(std::log(0.1), std::log(10.0));
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        const Params p{n, m, std::exp(log_h(rng))};
        try {
            const double c = random_c(critical_data(p), rng);
            worst = std::max(worst, std::abs(period(p, c).value - reference::period(p, c)));
        } catch (const Error& e) {
            return failed("oracle_equivalence", 1e-8, describe(p) + ": " + e.what());
        }
    }
    return bounded("oracle_equivalence", worst, 1e-8, "Chebyshev vs inset-extrapolated quadrature");
}

SuiteCheck sandwich(int n, int m, int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> log_h(std::log(0.01), std::log(100.0));
    double worst = -INFINITY;
    for (int i = 0; i < count; ++i) {
        const Params p{n, m, std::exp(log_h(rng))};
        try {
            const Limits lim = limits(p);
            const double lo = std::min(lim.a_val, lim.b_val);
            const double hi = std::max(lim.a_val, lim.b_val);
            const double value = period(p, random_c(critical_data(p), rng)).value;
            worst = std::max({worst, value - hi, lo - value});
        } catch (const Error& e) {
            return failed("sandwich", 0.0, describe(p) + ": " + e.what());
        }
    }
    return {"sandwich", worst, 0.0, worst < 0.0, "P strictly between min(A,B) and max(A,B)"};
}

struct ClosureOutcome {
    SuiteCheck closure;
    SuiteCheck norm;
};

ClosureOutcome closure(int n, int m) {
    for (int k = 2; k <= 10; ++k) {
        const Bracket b = bracket_endpoints(n, m, k);
        if (b.empty()) continue;
        const double h = b.h_low > 0.0 ? std::sqrt(b.h_low * b.h_high) : 0.5 * b.h_high;
        const Params p{n, m, h};
        const std::string where = describe(p) + " k=" + std::to_string(k);
        try {
            const SolveResult s = solve_period_equation(p, k, 1e-10);
            const Profile profile = generate_profile(p, s.c_star, k, 256);
            const double theta_total = profile.samples.back().theta;
            const PointCloud cloud = embed_points(profile, 8);
            double worst_norm = 0.0;
            for (std::size_t i = 0; i < cloud.size(); ++i) {
                double sq = 0.0;
                for (double x : cloud.point(i)) sq += x * x;
                worst_norm = std::max(worst_norm, std::abs(sq - 1.0));
            }
            return {bounded("closure", std::abs(theta_total - 2.0 * pi), kClosureTolerance, where),
                    bounded("embedding_norm", worst_norm, 1e-12, where)};
        } catch (const Error& e) {
            return {failed("closure", kClosureTolerance, where + ": " + e.what()),
                    failed("embedding_norm", 1e-12, where + ": not reached")};
        }
    }
    return {failed("closure", kClosureTolerance, "every bracket for k=2..10 is empty"),
            failed("embedding_norm", 1e-12, "not reached")};
}

}  // namespace

bool SuiteReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

SuiteReport run_verification_suite(int n, int m, const SuiteOptions& options) {
    validate_dimensions(n, m);
    SuiteReport report;
    report.n = n;
    report.m = m;
    report.seed = options.seed;

    IdentityOptions id_opt;
    id_opt.sample_count = options.identity_samples;
    id_opt.seed = options.seed;
    id_opt.fix_dimensions = true;
    const IdentityReport ids = evaluate_identities(Params{n, m, options.h_m}, id_opt);
    for (const IdentityCheck& c : ids.checks) {
        report.checks.push_back({c.name, c.max_residual, ids.tolerance, c.passed,
                                 "worst at " + describe(c.worst)});
    }
    if (classical_upper_endpoint(n, m, 2)) {
        report.checks.push_back(classical_endpoints(n, m));
    }

    std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    report.checks.push_back(q_structure(n, m, rng));
    report.checks.push_back(limit_convergence(n, m, rng));
    report.checks.push_back(oracle_equivalence(n, m, options.oracle_instances, rng));
    report.checks.push_back(sandwich(n, m, options.sandwich_instances, rng));
    ClosureOutcome closed = closure(n, m);
    report.checks.push_back(std::move(closed.closure));
    report.checks.push_back(std::move(closed.norm));
    return report;
}

}  // namespace hmsphere
