#include "hmsphere/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hmsphere/errors.hpp"

namespace hmsphere {
namespace {

using std::numbers::pi;

double midpoint_rule(const std::function<double(double)>& f, int nodes) {
    const double step = pi / nodes;
    double sum = 0.0;
    double carry = 0.0;  // Kahan
    for (int j = 0; j < nodes; ++j) {
        const double y = f((j + 0.5) * step) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum * step;
}

}  // namespace

QuadratureResult angle_integral(const std::function<double(double phi)>& integrand, double tol,
                                const QuadratureOptions& options) {
    if (!(tol > 0.0)) {
        throw DomainError("quadrature tolerance must be positive");
    }
    int nodes = std::max(options.initial_nodes, 1);
    double previous = midpoint_rule(integrand, nodes);
    double last_err = INFINITY;
    while (2LL * nodes <= options.max_nodes) {
        nodes *= 2;
        const double current = midpoint_rule(integrand, nodes);
        if (!std::isfinite(current)) {
            throw ConvergenceError("quadrature produced a non-finite value at N = " +
                                   std::to_string(nodes));
        }
        last_err = std::abs(current - previous);
        if (last_err <= tol * std::max(1.0, std::abs(current))) {
            return {current, last_err, nodes};
        }
        previous = current;
    }
    throw ConvergenceError("quadrature did not reach tolerance " + std::to_string(tol) +
                           " within " + std::to_string(options.max_nodes) +
                           " nodes (last difference " + std::to_string(last_err) + ")");
}

QuadratureResult singular_integral(const std::function<double(double t)>& smooth_part, double t1,
                                   double t2, double tol, const QuadratureOptions& options) {
    if (!(t1 < t2)) {
        throw DomainError("singular_integral: requires t1 < t2");
    }
    const double mid = 0.5 * (t1 + t2);
    const double half = 0.5 * (t2 - t1);
    return angle_integral([&](double phi) { return smooth_part(mid + half * std::cos(phi)); }, tol,
                          options);
}

}  // namespace hmsphere
