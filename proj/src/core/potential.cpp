#include "hmsphere/potential.hpp"

#include <cmath>
#include <string>

#include "hmsphere/errors.hpp"

namespace hmsphere {
namespace {

// Above this value of -n ln v the term v^-n is within a few decades of
// overflow; switch to logarithmic evaluation.
constexpr double kLogRegime = 600.0;

void require_positive(double v, const char* op) {
    if (!(v > 0.0)) {
        throw DomainError(std::string(op) + ": v must be positive (got v = " +
                          std::to_string(v) + ")");
    }
}

// ln(v^-n + H_m), finite for every v > 0.
double log_base(double v, const Params& p) {
    const double y = -p.n * std::log(v);
    if (y > kLogRegime) {
        return y + std::log1p(p.h_m * std::exp(-y));
    }
    return std::log(std::pow(v, -p.n) + p.h_m);
}

// v^2 (v^-n + H_m)^(2/m)
double curvature_term(double v, const Params& p) {
    const double y = -p.n * std::log(v);
    if (y > kLogRegime) {
        return std::exp(2.0 * std::log(v) + (2.0 / p.m) * log_base(v, p));
    }
    return v * v * std::pow(std::pow(v, -p.n) + p.h_m, 2.0 / p.m);
}

}  // namespace

double q_eval(double v, double c, const Params& params) {
    require_positive(v, "q_eval");
    return c - curvature_term(v, params) - v * v;
}

double q_prime(double v, const Params& params) {
    require_positive(v, "q_prime");
    const double n = params.n;
    const double m = params.m;
    const double h = params.h_m;
    const double y = -n * std::log(v);
    double bracket;
    if (y > kLogRegime) {
        bracket = std::exp(((2.0 - m) / m) * log_base(v, params) + y) *
                  ((m - n) / m + h * std::exp(-y));
    } else {
        const double vn = std::pow(v, -n);
        bracket = std::pow(vn + h, (2.0 - m) / m) * ((m - n) / m * vn + h);
    }
    return -2.0 * v * (bracket + 1.0);
}

double q_double_prime(double v, const Params& params) {
    require_positive(v, "q_double_prime");
    const double n = params.n;
    const double m = params.m;
    const double h = params.h_m;
    const double quad = 2.0 * n * n - 3.0 * n * m + m * m;
    const double lin = m * (n * n - 3.0 * n + 2.0 * m);
    const double y = -n * std::log(v);
    double curly;
    if (y > kLogRegime) {
        const double e = std::exp(-y);
        curly = std::exp(((2.0 - 2.0 * m) / m) * log_base(v, params) + 2.0 * y) *
                (quad + lin * h * e + m * m * h * h * e * e);
    } else {
        const double vn = std::pow(v, -n);
        curly = std::pow(vn + h, (2.0 - 2.0 * m) / m) *
                (quad * vn * vn + lin * h * vn + m * m * h * h);
    }
    return -2.0 / (m * m) * curly - 2.0;
}

double curvature_factor(double v, const Params& params) {
    require_positive(v, "curvature_factor");
    return std::exp(log_base(v, params) / params.m);
}

double potential_difference(double root, double offset, const Params& params) {
    require_positive(root, "potential_difference");
    require_positive(root + offset, "potential_difference");
    const double n = params.n;
    const double m = params.m;
    const double rho = std::log1p(offset / root);  // ln(t / root)

    // ln(x(t) / x(root)) with x(v) = v^-n + H_m
    const double root_share = 1.0 / (1.0 + params.h_m * std::exp(n * std::log(root)));
    const double z = std::expm1(-n * rho) * root_share;
    const double log_ratio = std::abs(z) < 0.5
                                 ? std::log1p(z)
                                 : log_base(root + offset, params) - log_base(root, params);

    const double w = 2.0 * rho + (2.0 / m) * log_ratio;
    return curvature_term(root, params) * std::expm1(w) + root * root * std::expm1(2.0 * rho);
}

}  // namespace hmsphere
