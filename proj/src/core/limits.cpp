#include "hmsphere/limits.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hmsphere/errors.hpp"

namespace hmsphere {

using std::numbers::pi;

double limit_at_infinity(double h, int m) {
    if (h < 0.0 || m < 1) {
        throw DomainError("limit_at_infinity: requires h >= 0 and m >= 1");
    }
    if (h == 0.0) return pi;
    return 2.0 * std::atan(std::pow(h, -1.0 / m));
}

double limit_at_infinity(const Params& params) {
    const Params p = validate(params);
    return limit_at_infinity(p.h_m, p.m);
}

double limit_at_c0(const Params& params, const CriticalData& crit) {
    const double n = params.n;
    const double m = params.m;
    const double radicand = (n - m) * crit.f0 * crit.f0 - (m - 2.0);
    return 2.0 * pi / std::sqrt(radicand);
}

double limit_at_c0(const Params& params) {
    return limit_at_c0(params, critical_data(params));
}

double limit_at_c0_unreduced(const Params& /*params*/, const CriticalData& crit) {
    return 2.0 * pi * std::sqrt(crit.c0) /
           (std::sqrt(crit.a) * std::sqrt(crit.c0 - crit.v0 * crit.v0));
}

Limits limits(const Params& params) {
    const Params p = validate(params);
    return {limit_at_infinity(p), limit_at_c0(p)};
}

Bracket bracket_endpoints(int n, int m, int k) {
    validate_dimensions(n, m);
    if (k < 2) {
        throw DomainError("k must satisfy k >= 2 (got k = " + std::to_string(k) + ")");
    }
    const double kd = k;
    // cot(pi/k) = tan(pi/2 - pi/k), which is exactly zero at k = 2.
    const double cot = std::tan(pi * (kd - 2.0) / (2.0 * kd));
    Bracket b;
    b.k = k;
    b.h_low = std::pow(cot, m);
    b.h_high = (kd * kd - 2.0) / n * std::pow((kd * kd + m - 2.0) / (n - m), (m - 2.0) / 2.0);
    return b;
}

std::optional<double> classical_upper_endpoint(int n, int m, int k) {
    const double nd = n;
    const double kd = k;
    switch (m) {
        case 1:
            return (kd * kd - 2.0) * std::sqrt(nd - 1.0) / (nd * std::sqrt(kd * kd - 1.0));
        case 2:
            return (kd * kd - 2.0) / nd;
        case 4:
            return (kd * kd * kd * kd - 4.0) / (nd * (nd - 4.0));
        default:
            return std::nullopt;
    }
}

double scalar_curvature_to_h2(double r_scal, int n) {
    const double nn = static_cast<double>(n) * (n - 1);
    return (r_scal - nn) / nn;
}

double h2_to_scalar_curvature(double h2, int n) {
    const double nn = static_cast<double>(n) * (n - 1);
    return nn * (h2 + 1.0);
}

}  // namespace hmsphere
