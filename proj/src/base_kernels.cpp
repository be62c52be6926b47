#include "hartogs/base_kernels.hpp"

#include <cmath>

#include "hartogs/moments.hpp"

namespace hartogs {

namespace {

void require_inside_disk(Complex s, const char* who) {
    if (std::abs(s) >= 1.0) throw DomainError(std::string(who) + ": requires |s| < 1");
}

} // namespace

FloorFrac alpha_floor_frac(const Rational& alpha) {
    return FloorFrac{alpha.num() / alpha.den(), alpha.num() % alpha.den(), alpha.den()};
}

Complex disk_weighted_kernel(double beta, Complex s) {
    if (beta < 0.0) throw DomainError("disk_weighted_kernel: requires beta >= 0");
    require_inside_disk(s, "disk_weighted_kernel");
    return (2.0 * beta + 1.0) / M_PI * principal_pow(1.0 - s, -(2.0 * beta + 2.0));
}

Complex punctured_disk_log_kernel(const Rational& alpha, Complex s) {
    require_inside_disk(s, "punctured_disk_log_kernel");
    if (s == Complex(0.0, 0.0))
        throw SingularityError("punctured_disk_log_kernel: pole at s = 0");
    const FloorFrac ff = alpha_floor_frac(alpha);
    const double f = ff.frac();
    const Complex one_minus_s = 1.0 - s;
    return int_pow(s, -(ff.floor_part + 1)) * ((1.0 - f) * s + f) /
           (M_PI * one_minus_s * one_minus_s);
}

Complex LogComplex::value() const {
    return std::polar(std::exp(log_abs), arg);
}

LogComplex scaled_base_kernel_log(BaseDomain base, const WeightSpec& weight, int m, Complex s) {
    if (m < 1) throw DomainError("scaled_base_kernel_log: m must be >= 1");
    require_inside_disk(s, "scaled_base_kernel_log");
    const Complex one_minus_s = 1.0 - s;
    const double lg1ms = std::log(std::abs(one_minus_s));
    const double ag1ms = std::arg(one_minus_s);

    if (const auto* c = weight.as_constant()) {
        // e^{2mc} * K_D(s); holds on both the disk and the punctured disk
        return LogComplex{2.0 * m * c->c - std::log(M_PI) - 2.0 * lg1ms, -2.0 * ag1ms};
    }
    if (const auto* a = weight.as_neg_log_abs()) {
        if (base != BaseDomain::PuncturedUnitDisk)
            throw DomainError("scaled_base_kernel_log: NegLogAbs weights live on the punctured disk");
        if (s == Complex(0.0, 0.0))
            throw SingularityError("scaled_base_kernel_log: pole at s = 0");
        const FloorFrac ff = alpha_floor_frac(a->alpha * m);
        const double f = ff.frac();
        const Complex affine = (1.0 - f) * s + f;
        const double e = static_cast<double>(ff.floor_part + 1);
        return LogComplex{-e * std::log(std::abs(s)) + std::log(std::abs(affine)) -
                              std::log(M_PI) - 2.0 * lg1ms,
                          -e * std::arg(s) + std::arg(affine) - 2.0 * ag1ms};
    }
    const auto* b = weight.as_neg_log_one_minus_sq();
    if (base != BaseDomain::UnitDisk)
        throw DomainError("scaled_base_kernel_log: NegLogOneMinusSq weights live on the unit disk");
    const double two_beta = 2.0 * m * b->beta;
    return LogComplex{std::log(two_beta + 1.0) - std::log(M_PI) - (two_beta + 2.0) * lg1ms,
                      -(two_beta + 2.0) * ag1ms};
}

Complex scaled_base_kernel(BaseDomain base, const WeightSpec& weight, int m, Complex s) {
    return scaled_base_kernel_log(base, weight, m, s).value();
}

Complex oracle_radial_kernel(BaseDomain base, const WeightSpec& weight, Complex s, int min_index,
                             int max_index) {
    require_inside_disk(s, "oracle_radial_kernel");
    if (min_index > 0 || max_index < 0)
        throw DomainError("oracle_radial_kernel: requires min_index <= 0 <= max_index");
    if (min_index < 0) {
        if (base != BaseDomain::PuncturedUnitDisk)
            throw DomainError("oracle_radial_kernel: negative indices need the punctured disk");
        const auto* a = weight.as_neg_log_abs();
        if (a == nullptr || static_cast<double>(min_index) <= -a->alpha.to_double() - 1.0)
            throw NonConvergenceError("oracle_radial_kernel: divergent moment requested");
    }
    Complex acc(0.0, 0.0);
    for (int n = min_index; n <= max_index; ++n) {
        const double m_n = radial_moment(weight, n);
        acc += int_pow(s, n) / m_n;
    }
    return acc;
}

} // namespace hartogs
