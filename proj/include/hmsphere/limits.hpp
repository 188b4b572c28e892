#pragma once

#include <optional>

#include "hmsphere/critical.hpp"
#include "hmsphere/params.hpp"

namespace hmsphere {

/// Limiting values of the period function P(H_m, n, C).
struct Limits {
    double a_val = 0.0;  ///< lim C -> inf:  2 arctan(H_m^(-1/m))
    double b_val = 0.0;  ///< lim C -> c0+:  2 pi / sqrt((n-m) F0^2 - (m-2))
};

/// A(H_m) = 2 arctan(H_m^(-1/m)).
double limit_at_infinity(const Params& params);

/// A(h) for h >= 0 and m >= 1; A(0) = pi. Accepts the lower bracket
/// endpoint for k = 2, which is not a valid H_m.
double limit_at_infinity(double h, int m);

/// B(H_m) = 2 pi ((n-m) F0^2 - (m-2))^(-1/2).
double limit_at_c0(const Params& params);
double limit_at_c0(const Params& params, const CriticalData& crit);

/// B(H_m) in the unreduced form 2 pi sqrt(c0) / (sqrt(a) sqrt(c0 - v0^2)).
double limit_at_c0_unreduced(const Params& params, const CriticalData& crit);

Limits limits(const Params& params);

/// Endpoints of the H_m interval on which 2 pi / k is a period value.
struct Bracket {
    int k = 0;
    double h_low = 0.0;   ///< cot(pi/k)^m; exactly 0 for k = 2
    double h_high = 0.0;  ///< (k^2-2)/n ((k^2+m-2)/(n-m))^((m-2)/2)

    bool empty() const { return !(h_low < h_high); }
    bool contains(double h) const { return h_low < h && h < h_high; }
};

/// Throws DomainError for k < 2 or an invalid (n, m).
Bracket bracket_endpoints(int n, int m, int k);

/// Published closed form of the upper endpoint for the classical orders:
///   m = 1: (k^2-2) sqrt(n-1) / (n sqrt(k^2-1))
///   m = 2: (k^2-2) / n
///   m = 4: (k^4-4) / (n (n-4))
/// and nullopt for every other m.
std::optional<double> classical_upper_endpoint(int n, int m, int k);

/// H_2 = (R - n(n-1)) / (n(n-1)).
double scalar_curvature_to_h2(double r_scal, int n);
/// R = n(n-1)(H_2 + 1).
double h2_to_scalar_curvature(double h2, int n);

}  // namespace hmsphere
