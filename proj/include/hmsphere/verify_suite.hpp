#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hmsphere {

struct SuiteCheck {
    std::string name;
    double value = 0.0;      ///< worst residual or margin observed
    double threshold = 0.0;  ///< pass iff value <= threshold (strict < for margins)
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteCheck> checks;

    bool all_passed() const;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    /// Base H_m for the identity checks; random draws are added around it.
    double h_m = 1.0;
    int identity_samples = 50;
    int oracle_instances = 3;
    int sandwich_instances = 10;
};

/// Runs the identity checks and the numerical property checks (limit
/// convergence, oracle equivalence, sandwich, closure, embedding norm,
/// structural q properties) for the dimension pair (n, m).
/// Throws DomainError for an invalid (n, m); individual check failures are
/// recorded, never thrown.
SuiteReport run_verification_suite(int n, int m, const SuiteOptions& options);

}  // namespace hmsphere
