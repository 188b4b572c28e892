#pragma once

#include "hmsphere/critical.hpp"
#include "hmsphere/params.hpp"

namespace hmsphere {

/// Turning points of the profile: the two positive zeros of q for a given C.
struct RootPair {
    double t1 = 0.0;
    double t2 = 0.0;
    double c = 0.0;
};

/// Locates t1 in (0, v0) and t2 in (v0, inf) by geometric bracketing from v0
/// followed by bisection and a guarded Newton polish.
///
/// Throws DomainError when c <= c0 (the window collapses to v0 or is empty).
RootPair find_roots(const Params& params, double c);
RootPair find_roots(const Params& params, const CriticalData& crit, double c);

}  // namespace hmsphere
