#pragma once

namespace hmsphere {

/// Problem instance: an n-dimensional hypersurface of constant m-th mean
/// curvature h_m in the unit (n+1)-sphere.
struct Params {
    int n = 0;
    int m = 0;
    double h_m = 0.0;
};

/// Returns `params` unchanged or throws DomainError naming the violated constraint.
Params validate(const Params& params);

/// Checks only the dimension pair; used where H_m is not part of the input.
void validate_dimensions(int n, int m);

}  // namespace hmsphere
