#include "hmsphere/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hmsphere/critical.hpp"
#include "hmsphere/errors.hpp"
#include "hmsphere/limits.hpp"
#include "hmsphere/potential.hpp"

namespace hmsphere {
namespace {

using std::numbers::pi;

// Mutation hook for the harness self-test: building with this macro defined
// breaks the numerator identity and `verify` must report it.
#ifdef HMSPHERE_TAMPER_NUMERATOR_IDENTITY
constexpr double kNumeratorSign = -1.0;
#else
constexpr double kNumeratorSign = 1.0;
#endif

double rel(double lhs, double rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0) return 0.0;
    return std::abs(lhs - rhs) / scale;
}

class Accumulator {
public:
    explicit Accumulator(double tol) { report_.tolerance = tol; }

    void record(const std::string& name, double residual, const Params& at) {
        auto it = std::find_if(report_.checks.begin(), report_.checks.end(),
                               [&](const IdentityCheck& c) { return c.name == name; });
        if (it == report_.checks.end()) {
            report_.checks.push_back(IdentityCheck{name, 0.0, at, 0, true});
            it = std::prev(report_.checks.end());
        }
        ++it->evaluations;
        // NaN residuals count as failures.
        if (!(residual <= it->max_residual)) {
            it->max_residual = std::isnan(residual) ? INFINITY : residual;
            it->worst = at;
        }
        it->passed = it->max_residual <= report_.tolerance;
    }

    IdentityReport take() { return std::move(report_); }

private:
    IdentityReport report_;
};

void check_instance(const Params& p, int k_max, Accumulator& acc) {
    const double n = p.n;
    const double m = p.m;
    const double h = p.h_m;
    const CriticalData crit = critical_data(p);
    const double f = crit.f0;
    const double fm = std::pow(f, m);
    const double fm2 = std::pow(f, m - 2.0);
    const double vn = std::pow(crit.v0, -n);
    const double x = vn + h;

    {
        const double t1 = fm;
        const double t2 = m / (m - n) * fm2;
        const double t3 = n / (m - n) * h;
        const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
        acc.record("critical_point_equation", std::abs(t1 + t2 + t3) / scale, p);
    }
    {
        const double inner = std::pow(x, (2.0 - m) / m);
        const double scale = 2.0 * crit.v0 *
                             (inner * (std::abs((m - n) / m) * vn + h) + 1.0);
        acc.record("stationarity", std::abs(q_prime(crit.v0, p)) / scale, p);
    }

    const double num_lhs =
        2.0 * m * pi * std::sqrt(std::pow(x, (2.0 * m - 2.0) / m) + std::pow(x, (2.0 * m - 4.0) / m));
    const double num_rhs = 2.0 * m * pi * std::sqrt(n / (n - m)) * std::pow(f, (m - 2.0) / 2.0) *
                           std::sqrt(fm2 + kNumeratorSign * h);
    acc.record("numerator_identity", rel(num_lhs, num_rhs), p);

    const double den_lhs = (2.0 * n * n - 3.0 * m * n + m * m) * vn * vn +
                           m * (n * n - 3.0 * n + 2.0 * m) * h * vn + m * m * h * h +
                           m * m * std::pow(x, (2.0 * m - 2.0) / m);
    const double den_rhs = m * m * n / (n - m) * (fm2 + h) * (2.0 * fm2 + n * h);
    acc.record("denominator_identity", rel(den_lhs, den_rhs), p);

    const double b_reduced = limit_at_c0(p, crit);
    const double b_unreduced = limit_at_c0_unreduced(p, crit);
    const double b_ratio = num_lhs / std::sqrt(den_lhs);
    acc.record("limit_forms_agree",
               std::max(rel(b_reduced, b_unreduced), rel(b_reduced, b_ratio)), p);

    double worst = 0.0;
    for (int k = 2; k <= k_max; ++k) {
        const Bracket b = bracket_endpoints(p.n, p.m, k);
        const double target = 2.0 * pi / k;
        const double a_low = limit_at_infinity(b.h_low, p.m);
        const double b_high = limit_at_c0(Params{p.n, p.m, b.h_high});
        worst = std::max({worst, rel(a_low, target), rel(b_high, target)});
    }
    acc.record("endpoint_values", worst, {p.n, p.m, p.h_m});
}

}  // namespace

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

const IdentityCheck* IdentityReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::string IdentityReport::failures() const {
    std::string out;
    for (const auto& c : checks) {
        if (c.passed) continue;
        if (!out.empty()) out += ", ";
        out += c.name;
    }
    return out;
}

IdentityReport evaluate_identities(const Params& params, const IdentityOptions& options) {
    const Params base = validate(params);
    if (options.sample_count < 0 || options.k_max < 2 || options.n_max < 2 ||
        !(options.h_min > 0.0) || !(options.h_max > options.h_min)) {
        throw DomainError("evaluate_identities: invalid sampling options");
    }
    Accumulator acc(options.tolerance);
    check_instance(base, options.k_max, acc);

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> log_h(std::log(options.h_min), std::log(options.h_max));
    for (int i = 0; i < options.sample_count; ++i) {
        Params p = base;
        if (!options.fix_dimensions) {
            p.n = std::uniform_int_distribution<int>(2, options.n_max)(rng);
            p.m = std::uniform_int_distribution<int>(1, p.n - 1)(rng);
        }
        p.h_m = std::exp(log_h(rng));
        check_instance(p, options.k_max, acc);
    }
    return acc.take();
}

IdentityReport verify_identities(const Params& params, int sample_count, std::uint64_t seed) {
    IdentityOptions options;
    options.sample_count = sample_count;
    options.seed = seed;
    IdentityReport report = evaluate_identities(params, options);
    if (!report.all_passed()) {
        throw IdentityViolation("identity check failed: " + report.failures());
    }
    return report;
}

}  // namespace hmsphere
