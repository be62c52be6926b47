#include "hartogs/moments.hpp"

#include <cmath>

#include "hartogs/quadrature.hpp"

namespace hartogs {

double radial_moment(const WeightSpec& weight, int n, double inner_radius, double outer_radius) {
    if (inner_radius < 0.0 || outer_radius <= inner_radius)
        throw DomainError("radial_moment: requires 0 <= inner_radius < outer_radius");

    std::function<double(double)> integrand;
    if (const auto* a = weight.as_neg_log_abs()) {
        // combine the monomial and weight powers so tiny-r evaluations do not
        // overflow pairwise before cancelling
        const double expo = 2.0 * n + 1.0 + 2.0 * a->alpha.to_double();
        integrand = [expo](double r) { return std::pow(r, expo); };
    } else if (const auto* c = weight.as_constant()) {
        const double factor = std::exp(-2.0 * c->c);
        integrand = [n, factor](double r) { return factor * std::pow(r, 2.0 * n + 1.0); };
    } else {
        const double beta = weight.as_neg_log_one_minus_sq()->beta;
        integrand = [n, beta](double r) {
            return std::pow(r, 2.0 * n + 1.0) * std::pow(1.0 - r * r, 2.0 * beta);
        };
    }
    return 2.0 * M_PI * integrate_adaptive(integrand, inner_radius, outer_radius);
}

} // namespace hartogs
