#include "hmsphere/params.hpp"

#include <cmath>
#include <string>

#include "hmsphere/errors.hpp"

namespace hmsphere {

void validate_dimensions(int n, int m) {
    if (n < 2) {
        throw DomainError("n must satisfy n >= 2 (got n = " + std::to_string(n) + ")");
    }
    if (m < 1 || m > n - 1) {
        throw DomainError("m must satisfy 1 <= m <= n-1 (got m = " + std::to_string(m) +
                          ", n = " + std::to_string(n) + ")");
    }
}

Params validate(const Params& params) {
    validate_dimensions(params.n, params.m);
    if (!(params.h_m > 0.0) || !std::isfinite(params.h_m)) {
        throw DomainError("h_m must be a finite positive number (got h_m = " +
                          std::to_string(params.h_m) + ")");
    }
    return params;
}

}  // namespace hmsphere
