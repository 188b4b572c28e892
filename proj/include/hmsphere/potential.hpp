#pragma once

#include "hmsphere/params.hpp"

namespace hmsphere {

// The profile g(s) of the rotational hypersurface satisfies (g')^2 = q(g) with
//
//     q(v) = C - v^2 (v^-n + H_m)^(2/m) - v^2.
//
// Every function here requires v > 0 and throws DomainError otherwise. For
// tiny v the power terms are evaluated in logarithmic form so that v^-n never
// overflows on its own; the results saturate to +-inf only when the true value
// is out of range.

/// q(v) for the constant C = `c`.
double q_eval(double v, double c, const Params& params);

/// q'(v); independent of C.
double q_prime(double v, const Params& params);

/// q''(v); always < -2.
double q_double_prime(double v, const Params& params);

/// lambda(v) = (v^-n + H_m)^(1/m).
double curvature_factor(double v, const Params& params);

/// Returns q(root) - q(root + offset) without cancellation for small offsets.
///
/// Equivalently G(root + offset) - G(root) where G = C - q is the C-free part
/// of the potential. Used to evaluate q next to a turning point, where the
/// direct formula loses all relative accuracy. Requires root > 0 and
/// root + offset > 0.
double potential_difference(double root, double offset, const Params& params);

}  // namespace hmsphere
