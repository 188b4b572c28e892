#pragma once

#include <functional>

namespace hmsphere {

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;  ///< |I_N - I_{N/2}| at acceptance
    int nodes = 0;
};

struct QuadratureOptions {
    int initial_nodes = 16;
    int max_nodes = 1 << 20;
};

/// Integral of `integrand` over (0, pi) by the N-point midpoint rule,
/// N = 16, 32, ... until successive values differ by at most
/// tol * max(1, |value|). The nodes (j + 1/2) pi / N never touch 0 or pi.
///
/// Throws ConvergenceError when N would exceed `options.max_nodes`.
QuadratureResult angle_integral(const std::function<double(double phi)>& integrand, double tol,
                                const QuadratureOptions& options = {});

/// Integral of smooth_part(t) / sqrt((t - t1)(t2 - t)) over (t1, t2).
///
/// The substitution t = (t1+t2)/2 + (t2-t1)/2 cos(phi) removes both
/// inverse-square-root endpoint singularities; the result is the
/// Chebyshev-Gauss rule applied to smooth_part. Throws DomainError unless
/// t1 < t2.
QuadratureResult singular_integral(const std::function<double(double t)>& smooth_part, double t1,
                                   double t2, double tol, const QuadratureOptions& options = {});

}  // namespace hmsphere
