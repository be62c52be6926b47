#include "hartogs/weights.hpp"

#include <cmath>
#include <limits>

namespace hartogs {

WeightSpec::WeightSpec(NegLogOneMinusSq f) : family_(f) {
    if (f.beta < 0.0 || !std::isfinite(f.beta))
        throw DomainError("WeightSpec: NegLogOneMinusSq requires beta >= 0");
}

double eval_phi(const WeightSpec& w, Complex z) {
    if (const auto* c = w.as_constant()) return c->c;
    if (const auto* a = w.as_neg_log_abs()) {
        const double r = std::abs(z);
        if (r == 0.0 || r >= 1.0) throw DomainError("eval_phi: z outside the punctured unit disk");
        return -a->alpha.to_double() * std::log(r);
    }
    const auto* b = w.as_neg_log_one_minus_sq();
    const double r2 = std::norm(z);
    if (r2 >= 1.0) throw DomainError("eval_phi: z outside the unit disk");
    return -b->beta * std::log1p(-r2);
}

double fiber_radius(const WeightSpec& w, Complex z) {
    return std::exp(-eval_phi(w, z));
}

WeightSpec scale_weight(const WeightSpec& w, int m) {
    if (m < 1) throw DomainError("scale_weight: m must be >= 1");
    if (const auto* c = w.as_constant()) return WeightSpec::constant(m * c->c);
    if (const auto* a = w.as_neg_log_abs()) return WeightSpec::neg_log_abs(a->alpha * m);
    return WeightSpec::neg_log_one_minus_sq(m * w.as_neg_log_one_minus_sq()->beta);
}

HartogsSpec::HartogsSpec(BaseDomain b, WeightSpec w, int N, double p)
    : base(b), weight(std::move(w)), fiber_dim(N), norm_p(p) {
    if (N < 1) throw DomainError("HartogsSpec: fiber dimension must be >= 1");
    if (!(p >= 1.0)) throw DomainError("HartogsSpec: norm exponent must satisfy p >= 1");
}

bool HartogsSpec::is_p_infinite() const {
    return std::isinf(norm_p);
}

bool in_base_domain(BaseDomain base, Complex z) {
    const double r = std::abs(z);
    if (r >= 1.0) return false;
    return base == BaseDomain::UnitDisk || r > 0.0;
}

double lp_norm(const Complex* w, int N, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (int k = 0; k < N; ++k) m = std::fmax(m, std::abs(w[k]));
        return m;
    }
    double acc = 0.0;
    for (int k = 0; k < N; ++k) acc += std::pow(std::abs(w[k]), p);
    return std::pow(acc, 1.0 / p);
}

} // namespace hartogs
