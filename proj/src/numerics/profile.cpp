#include "hmsphere/profile.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "hmsphere/errors.hpp"
#include "hmsphere/period.hpp"
#include "hmsphere/potential.hpp"

namespace hmsphere {
namespace {

using std::numbers::pi;
using Rule = boost::math::quadrature::gauss<double, 20>;

struct CellIntegral {
    double ds = 0.0;
    double dtheta = 0.0;
};

CellIntegral integrate_cell(const PeriodKernel& kernel, double a, double b) {
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    CellIntegral out;
    auto add = [&](double phi, double weight) {
        const PeriodKernel::Node node = kernel.at(phi);
        const double inv = 1.0 / std::sqrt(node.h);
        out.ds += weight * inv;
        out.dtheta += weight * kernel.angle_speed(node.t) * inv;
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) {
            add(center, w[i]);
        } else {
            add(center - half * x[i], w[i]);
            add(center + half * x[i], w[i]);
        }
    }
    out.ds *= half;
    out.dtheta *= half;
    return out;
}

}  // namespace

Profile generate_profile(const Params& params, double c, int k, int samples_per_half) {
    if (k < 1) {
        throw DomainError("generate_profile: k must be >= 1");
    }
    if (samples_per_half < 16) {
        throw DomainError("generate_profile: samples_per_half must be >= 16 (got " +
                          std::to_string(samples_per_half) + ")");
    }
    const PeriodKernel kernel(params, c);
    const Params& p = kernel.params();
    const double t1 = kernel.roots().t1;
    const double t2 = kernel.roots().t2;
    const double mid = 0.5 * (t1 + t2);
    const double half = 0.5 * (t2 - t1);
    const double sqrt_c = std::sqrt(c);

    // Half oscillation, phi = 0 (g = t1) to phi = pi (g = t2).
    std::vector<ProfileSample> half_curve(static_cast<std::size_t>(samples_per_half) + 1);
    double s = 0.0;
    double theta = 0.0;
    for (int j = 0; j <= samples_per_half; ++j) {
        const double phi = pi * j / samples_per_half;
        if (j > 0) {
            const CellIntegral cell = integrate_cell(kernel, pi * (j - 1) / samples_per_half, phi);
            s += cell.ds;
            theta += cell.dtheta;
        }
        double g = mid - half * std::cos(phi);
        if (j == 0) g = t1;
        if (j == samples_per_half) g = t2;
        auto& out = half_curve[static_cast<std::size_t>(j)];
        out.s = s;
        out.g = g;
        out.r = g / sqrt_c;
        out.lambda = curvature_factor(g, p);
        out.theta = theta;
    }

    Profile profile;
    profile.params = p;
    profile.k = k;
    profile.c = c;
    profile.t_half = s;
    profile.period_p = 2.0 * theta;
    const double period_t = 2.0 * s;
    const double period_p = profile.period_p;

    profile.samples.reserve(static_cast<std::size_t>(2 * k * samples_per_half + 1));
    for (int rep = 0; rep < k; ++rep) {
        const double s_off = rep * period_t;
        const double th_off = rep * period_p;
        for (int j = 0; j < samples_per_half; ++j) {
            ProfileSample sample = half_curve[static_cast<std::size_t>(j)];
            sample.s += s_off;
            sample.theta += th_off;
            profile.samples.push_back(sample);
        }
        // g is even about s = T/2: the descending half mirrors the ascending one.
        for (int j = samples_per_half; j > 0; --j) {
            ProfileSample sample = half_curve[static_cast<std::size_t>(j)];
            sample.s = s_off + period_t - sample.s;
            sample.theta = th_off + period_p - sample.theta;
            profile.samples.push_back(sample);
        }
    }
    ProfileSample last = half_curve.front();
    last.s = k * period_t;
    last.theta = k * period_p;
    profile.samples.push_back(last);

    profile.closure_error = std::abs(k * period_p - 2.0 * pi);
    profile.closure_warning = profile.closure_error > kClosureTolerance;
    return profile;
}

PointCloud::PointCloud(int dim, std::size_t rings, int circle_samples)
    : dim_(dim), rings_(rings), circle_samples_(circle_samples),
      coords_(static_cast<std::size_t>(dim) * rings * static_cast<std::size_t>(circle_samples), 0.0) {}

std::span<const double> PointCloud::point(std::size_t i) const {
    return std::span<const double>(coords_).subspan(i * static_cast<std::size_t>(dim_),
                                                    static_cast<std::size_t>(dim_));
}

std::span<const double> PointCloud::point(std::size_t ring, int j) const {
    return point(ring * static_cast<std::size_t>(circle_samples_) + static_cast<std::size_t>(j));
}

std::span<double> PointCloud::mutable_point(std::size_t i) {
    return std::span<double>(coords_).subspan(i * static_cast<std::size_t>(dim_),
                                              static_cast<std::size_t>(dim_));
}

PointCloud embed_points(const Profile& profile, int circle_samples) {
    if (circle_samples < 3) {
        throw DomainError("embed_points: circle_samples must be >= 3");
    }
    const int n = profile.params.n;
    PointCloud cloud(n + 2, profile.samples.size(), circle_samples);
    std::size_t index = 0;
    for (const ProfileSample& sample : profile.samples) {
        const double r = sample.r;
        const double rest = std::sqrt((1.0 - r) * (1.0 + r));
        const double x_far = rest * std::cos(sample.theta);
        const double y_far = rest * std::sin(sample.theta);
        for (int j = 0; j < circle_samples; ++j) {
            const double u = 2.0 * pi * j / circle_samples;
            auto x = cloud.mutable_point(index++);
            x[0] = r * std::cos(u);
            x[1] = r * std::sin(u);
            x[static_cast<std::size_t>(n)] = x_far;
            x[static_cast<std::size_t>(n) + 1] = y_far;
        }
    }
    return cloud;
}

}  // namespace hmsphere
