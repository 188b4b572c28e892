#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hmsphere/params.hpp"

namespace hmsphere {

struct IdentityCheck {
    std::string name;
    double max_residual = 0.0;  ///< max relative residual over all evaluations
    Params worst;               ///< instance attaining max_residual
    int evaluations = 0;
    bool passed = true;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    double tolerance = 0.0;

    bool all_passed() const;
    /// nullptr when no check has this name.
    const IdentityCheck* find(const std::string& name) const;
    /// Comma-separated names of failing checks.
    std::string failures() const;
};

struct IdentityOptions {
    int sample_count = 50;
    std::uint64_t seed = 0;
    /// Keep (n, m) of the base instance and randomize only H_m.
    bool fix_dimensions = false;
    int n_max = 12;
    double h_min = 0.01;
    double h_max = 100.0;
    int k_max = 10;
    double tolerance = 1e-9;
};

/// Evaluates the exact algebraic relations between the critical point, the
/// reduced and unreduced forms of B(H_m), and the bracket endpoints, at
/// `params` and at `sample_count` seeded random instances. Checks:
///
///   critical_point_equation  F0^m + m/(m-n) F0^(m-2) + n/(m-n) H_m = 0
///   stationarity             q'(v0) = 0
///   numerator_identity       2m pi (X^((2m-2)/m) + X^((2m-4)/m))^(1/2)
///                              = 2m pi (n/(n-m))^(1/2) F0^((m-2)/2) (F0^(m-2) + H_m)^(1/2)
///   denominator_identity     unreduced denominator
///                              = m^2 n/(n-m) (F0^(m-2) + H_m)(2 F0^(m-2) + n H_m)
///   limit_forms_agree        the three expressions for B(H_m)
///   endpoint_values          A(h_low(k)) = B(h_high(k)) = 2 pi / k, k = 2..k_max
///
/// with X = v0^-n + H_m evaluated from v0. Never throws on a failed check.
IdentityReport evaluate_identities(const Params& params, const IdentityOptions& options);

/// As evaluate_identities with default options; throws IdentityViolation
/// naming every check whose residual exceeds 1e-9.
IdentityReport verify_identities(const Params& params, int sample_count, std::uint64_t seed);

}  // namespace hmsphere
