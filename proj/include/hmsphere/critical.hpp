#pragma once

#include "hmsphere/params.hpp"

namespace hmsphere {

/// Critical point of q and the constants entering the limit C -> c0+.
struct CriticalData {
    double f0 = 0.0;  ///< F0 = (v0^-n + H_m)^(1/m)
    double v0 = 0.0;  ///< unique zero of q'
    double c0 = 0.0;  ///< v0^2 (F0^2 + 1); no window (t1, t2) exists for C <= c0
    double a = 0.0;   ///< -q''(v0) / 2, always > 1
};

/// Left side minus right side of the critical-point condition written in u = F0^2:
///
///     (n - m) u^(m/2) - m u^((m-2)/2) - n H_m.
///
/// Strictly increasing for u > max((m-2)/(n-m), 0).
double critical_equation(double u, const Params& params);

/// Solves q'(v0) = 0 through the monotone equation in u = F0^2.
///
/// Throws DomainError for invalid params and ConvergenceError if the root
/// cannot be bracketed (a root always exists, so this indicates overflow).
CriticalData critical_data(const Params& params);

}  // namespace hmsphere
