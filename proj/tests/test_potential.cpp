#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hmsphere/critical.hpp"
#include "hmsphere/errors.hpp"
#include "hmsphere/potential.hpp"
#include "test_support.hpp"

using namespace hmsphere;
using hmsphere::testing::InstanceSampler;

TEST_CASE("validate accepts and rejects instances") {
    const Params ok{3, 2, 1.0};
    CHECK(validate(ok).n == 3);
    CHECK(validate(ok).h_m == 1.0);

    CHECK_THROWS_WITH_AS(validate({3, 3, 1.0}), doctest::Contains("m must satisfy"), DomainError);
    CHECK_THROWS_WITH_AS(validate({2, 1, -0.5}), doctest::Contains("h_m"), DomainError);
    CHECK_THROWS_AS(validate({1, 1, 1.0}), DomainError);
    CHECK_THROWS_AS(validate({4, 0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate({4, 2, 0.0}), DomainError);
    CHECK_THROWS_AS(validate({4, 2, NAN}), DomainError);
}

TEST_CASE("q at the reference instance") {
    const Params p{3, 2, 1.0};
    // q(v) = 3 - 1/v - 2v^2 for C = 3
    CHECK(q_eval(1.0, 3.0, p) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(q_eval(0.5, 3.0, p) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q_prime(0.5, p) == doctest::Approx(2.0).epsilon(1e-14));

    const double v0 = std::pow(4.0, -1.0 / 3.0);
    CHECK(q_double_prime(v0, p) == doctest::Approx(-12.0).epsilon(1e-13));

    const CriticalData crit = critical_data(p);
    CHECK(q_eval(crit.v0, 5.0, p) == doctest::Approx(5.0 - crit.c0).epsilon(1e-14));

    CHECK_THROWS_AS(q_eval(0.0, 3.0, p), DomainError);
    CHECK_THROWS_AS(q_prime(-1.0, p), DomainError);
    CHECK_THROWS_AS(q_double_prime(0.0, p), DomainError);
}

TEST_CASE("derivatives match central differences") {
    InstanceSampler sampler(11);
    for (int i = 0; i < 40; ++i) {
        const Params p = sampler.next();
        CAPTURE(p.n);
        CAPTURE(p.m);
        CAPTURE(p.h_m);
        const double h = 1e-6;
        for (double v : {0.7, 0.3, 1.9}) {
            const double fd1 = (q_eval(v + h, 1.0, p) - q_eval(v - h, 1.0, p)) / (2 * h);
            const double qp = q_prime(v, p);
            CHECK(std::abs(qp - fd1) <= 1e-5 * std::max(1.0, std::abs(qp)));
            const double fd2 = (q_prime(v + h, p) - q_prime(v - h, p)) / (2 * h);
            const double qpp = q_double_prime(v, p);
            CHECK(std::abs(qpp - fd2) <= 1e-5 * std::max(1.0, std::abs(qpp)));
        }
    }
}

TEST_CASE("q'' < -2 and q' strictly decreasing on a log grid") {
    InstanceSampler sampler(12);
    for (int i = 0; i < 50; ++i) {
        const Params p = sampler.next();
        double previous = INFINITY;
        for (int j = 0; j <= 240; ++j) {
            const double v = std::pow(10.0, -3.0 + 6.0 * j / 240.0);
            CHECK(q_double_prime(v, p) < -2.0);
            const double qp = q_prime(v, p);
            CHECK(qp < previous);
            previous = qp;
        }
    }
}

TEST_CASE("tiny v stays finite or saturates with the right sign") {
    const Params p{12, 5, 2.0};
    // v^-n overflows a double here, the logarithmic route does not.
    const double v = 1e-30;
    const double q = q_eval(v, 1.0, p);
    CHECK(std::isfinite(q));
    CHECK(q < 0.0);
    CHECK(q_prime(v, p) > 0.0);
    CHECK(q_double_prime(v, p) < -2.0);
    CHECK(std::isfinite(curvature_factor(v, p)));

    const double vv = 1e-200;
    CHECK(q_eval(vv, 1.0, p) < 0.0);
    CHECK(!std::isnan(q_prime(vv, p)));

    // Continuity across the switch to logarithmic evaluation.
    const double v_switch = std::exp(-600.0 / p.n);
    for (double f : {0.999, 1.001}) {
        const double a = q_eval(v_switch * f, 0.0, p);
        const double b = q_eval(v_switch, 0.0, p);
        CHECK(std::abs(a - b) / std::abs(b) < 0.05);
    }
}

TEST_CASE("potential_difference agrees with direct differences and stays accurate near zero") {
    InstanceSampler sampler(13);
    for (int i = 0; i < 30; ++i) {
        const Params p = sampler.next();
        for (double root : {0.2, 0.9, 3.0}) {
            for (double frac : {-0.5, -0.1, 0.3, 2.0}) {
                const double d = frac * root;
                const double direct = q_eval(root, 0.0, p) - q_eval(root + d, 0.0, p);
                const double accurate = potential_difference(root, d, p);
                const double scale = std::max({1.0, std::abs(q_eval(root, 0.0, p)), std::abs(q_eval(root + d, 0.0, p))});
                CHECK(std::abs(direct - accurate) <= 1e-12 * scale);
            }
            // First-order behaviour: q(root) - q(root + d) ~ -q'(root) d.
            const double d = 1e-9 * root;
            const double expected = -q_prime(root, p) * d;
            CHECK(potential_difference(root, d, p) == doctest::Approx(expected).epsilon(1e-6));
        }
    }
}

TEST_CASE("curvature factor") {
    const Params p{3, 2, 1.0};
    CHECK(curvature_factor(1.0, p) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(curvature_factor(0.5, p) == doctest::Approx(3.0).epsilon(1e-15));
}
