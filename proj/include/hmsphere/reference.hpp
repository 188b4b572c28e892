#pragma once

#include "hmsphere/params.hpp"
#include "hmsphere/roots.hpp"

namespace hmsphere::reference {

// Brute-force counterparts of the period quadrature, kept on a separate
// code path: roots by TOMS 748 on the plain q, integrals by adaptive
// Gauss-Kronrod on [t1 + d, t2 - d] with the inset d -> 0 removed by
// Richardson extrapolation in powers of sqrt(d). Slow; meant for checking.

struct InsetOptions {
    double first_inset = 1e-2;  ///< d_0 relative to t2 - t1
    int levels = 7;             ///< d_j = d_0 / 4^j, j < levels
    double segment_tol = 1e-13;
};

RootPair roots(const Params& params, double c);

/// P(H_m, n, C).
double period(const Params& params, double c, const InsetOptions& options = {});

/// T/2.
double half_period(const Params& params, double c, const InsetOptions& options = {});

}  // namespace hmsphere::reference
