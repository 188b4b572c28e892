#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hmsphere/params.hpp"

namespace hmsphere::testing {

// Seeded generator of valid instances.
class InstanceSampler {
public:
    explicit InstanceSampler(std::uint64_t seed, int n_max = 12, double h_min = 0.01,
                             double h_max = 100.0)
        : rng_(seed), n_max_(n_max), log_h_(std::log(h_min), std::log(h_max)) {}

    Params next() {
        Params p;
        p.n = std::uniform_int_distribution<int>(2, n_max_)(rng_);
        p.m = std::uniform_int_distribution<int>(1, p.n - 1)(rng_);
        p.h_m = std::exp(log_h_(rng_));
        return p;
    }

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

private:
    std::mt19937_64 rng_;
    int n_max_;
    std::uniform_real_distribution<double> log_h_;
};

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace hmsphere::testing
