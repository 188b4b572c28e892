#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hmsphere/params.hpp"

namespace hmsphere {

struct ProfileSample {
    double s = 0.0;       ///< arclength
    double g = 0.0;       ///< profile function, t1 <= g <= t2
    double r = 0.0;       ///< g / sqrt(C)
    double lambda = 0.0;  ///< (g^-n + H_m)^(1/m)
    double theta = 0.0;   ///< accumulated rotation angle
};

/// Closed (or nearly closed) profile curve over k oscillations of g.
struct Profile {
    Params params;
    std::vector<ProfileSample> samples;
    double t_half = 0.0;    ///< T/2
    double period_p = 0.0;  ///< P, angle advanced per oscillation
    int k = 0;
    double c = 0.0;
    double closure_error = 0.0;     ///< |k P - 2 pi|
    bool closure_warning = false;   ///< closure_error > 1e-6
};

inline constexpr double kClosureTolerance = 1e-6;

/// Samples the profile at the images of an equispaced phi grid on each half
/// oscillation, reflected about s = T/2 and replicated k times with theta
/// offsets j P. s and theta are accumulated cell by cell with Gauss-Legendre
/// quadrature in phi, which never evaluates at a turning point.
///
/// Requires c > c0, k >= 1 and samples_per_half >= 16. The result holds
/// 2 k samples_per_half + 1 samples; the first has s = 0, g = t1, theta = 0.
Profile generate_profile(const Params& params, double c, int k, int samples_per_half = 256);

/// Points of the rotational hypersurface in R^(n+2), sample-major:
/// point (i, j) = (r_i y(u_j), sqrt(1 - r_i^2) cos theta_i, sqrt(1 - r_i^2) sin theta_i)
/// with y(u) = (cos u, sin u, 0, ..., 0) on a great circle of S^(n-1) and
/// u_j = 2 pi j / circle_samples.
class PointCloud {
public:
    PointCloud(int dim, std::size_t rings, int circle_samples);

    int dim() const { return dim_; }
    std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dim_); }
    std::size_t rings() const { return rings_; }
    int circle_samples() const { return circle_samples_; }

    std::span<const double> point(std::size_t i) const;
    std::span<const double> point(std::size_t ring, int j) const;
    std::span<double> mutable_point(std::size_t i);

private:
    int dim_;
    std::size_t rings_;
    int circle_samples_;
    std::vector<double> coords_;
};

/// Throws DomainError for circle_samples < 3.
PointCloud embed_points(const Profile& profile, int circle_samples);

}  // namespace hmsphere
