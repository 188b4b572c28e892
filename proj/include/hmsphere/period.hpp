#pragma once

#include "hmsphere/critical.hpp"
#include "hmsphere/params.hpp"
#include "hmsphere/quadrature.hpp"
#include "hmsphere/roots.hpp"

namespace hmsphere {

/// Integrands of the period and half-period integrals over one oscillation
/// window (t1, t2), written in the angle phi in [0, pi] with
///
///     t(phi) = (t1 + t2)/2 - (t2 - t1)/2 cos(phi),   phi = 0 -> t1, phi = pi -> t2.
///
/// The singular factor of 1/sqrt(q) is split off as
/// q(t) = (t - t1)(t2 - t) h(t); h is evaluated from the offsets to the
/// nearer turning point so it keeps full relative accuracy at the nodes
/// closest to t1 and t2.
class PeriodKernel {
public:
    /// Throws DomainError when c <= c0.
    PeriodKernel(const Params& params, double c);
    PeriodKernel(const Params& params, const CriticalData& crit, double c);

    struct Node {
        double t = 0.0;
        double h = 0.0;  ///< q(t) / ((t - t1)(t2 - t))
    };

    Node at(double phi) const;

    /// sqrt(C) t lambda(t) / (C - t^2): the angle speed d(theta)/ds at g = t.
    double angle_speed(double t) const;

    /// d(theta)/d(phi) and d(s)/d(phi).
    double theta_density(double phi) const;
    double arclength_density(double phi) const;

    /// Boundary limits h(t1) = q'(t1) / (t2 - t1) and h(t2) = -q'(t2) / (t2 - t1).
    double h_limit_t1() const;
    double h_limit_t2() const;

    const Params& params() const { return params_; }
    const CriticalData& critical() const { return crit_; }
    const RootPair& roots() const { return roots_; }
    double c() const { return roots_.c; }

private:
    Params params_;
    CriticalData crit_;
    RootPair roots_;
    double sqrt_c_ = 0.0;
};

struct PeriodResult {
    double value = 0.0;
    double err_estimate = 0.0;
    int nodes = 0;
    /// Refinement tolerance actually applied: the requested one, raised to
    /// the conditioning floor ~ eps C / (C - c0) when C is very close to c0.
    double tolerance = 0.0;
};

/// Default refinement tolerance for period quadrature.
inline constexpr double kDefaultQuadratureTol = 1e-12;

/// P(H_m, n, C): the angle advanced over one full oscillation of the profile.
PeriodResult period(const Params& params, double c, double tol = kDefaultQuadratureTol);
PeriodResult period(const PeriodKernel& kernel, double tol = kDefaultQuadratureTol);

/// T/2: arclength from g = t1 to g = t2.
PeriodResult half_period(const Params& params, double c, double tol = kDefaultQuadratureTol);
PeriodResult half_period(const PeriodKernel& kernel, double tol = kDefaultQuadratureTol);

struct SolveOptions {
    double start_offset = 1e-8;  ///< first scan point c0 (1 + start_offset)
    double scan_ratio = 2.0;
    int scan_steps = 60;
    int max_bisections = 200;
};

struct SolveResult {
    double c_star = 0.0;
    double p_achieved = 0.0;
    int iterations = 0;  ///< period evaluations, scan included
    int k = 0;
    double err_estimate = 0.0;  ///< quadrature error of p_achieved
    int nodes = 0;
};

/// Finds C with P(H_m, n, C) = 2 pi / k.
///
/// Scans C over a geometric grid above c0 for a sign change of P - 2 pi / k
/// and bisects the first bracketing pair; P is not assumed monotone.
/// Throws BracketError if H_m is not strictly inside (h_low(k), h_high(k)),
/// ConvergenceError if the scan finds no sign change or bisection stalls.
SolveResult solve_period_equation(const Params& params, int k, double tol = 1e-10,
                                  const SolveOptions& options = {});

}  // namespace hmsphere
