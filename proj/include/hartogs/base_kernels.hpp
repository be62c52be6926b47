#pragma once

#include "hartogs/weights.hpp"

namespace hartogs {

/// Exact floor/fractional-part split of a positive rational alpha = u/v:
/// floor_part = u div v, frac = (u mod v)/v.
struct FloorFrac {
    std::int64_t floor_part;
    std::int64_t frac_num; // 0 <= frac_num < frac_den
    std::int64_t frac_den;

    double frac() const { return static_cast<double>(frac_num) / static_cast<double>(frac_den); }
};

FloorFrac alpha_floor_frac(const Rational& alpha);

/// Weighted Bergman kernel of the unit disk with weight phi = -beta*log(1-|z|^2)
/// (density (1-|z|^2)^{2 beta}), as a function of s = z*conj(zeta):
///   K(s) = (2 beta + 1)/pi * (1 - s)^{-(2 beta + 2)}.
Complex disk_weighted_kernel(double beta, Complex s);

/// Weighted Bergman kernel of the punctured disk with phi = -alpha*log|z|
/// (density |z|^{2 alpha}), alpha > 0 rational, at s = z*conj(zeta):
///   K(s) = s^{-floor(alpha)-1} * ((1-frac(alpha)) s + frac(alpha)) / (pi (s-1)^2).
/// For integer alpha this reduces to 1/(pi s^alpha (s-1)^2); the unified
/// floor/frac form covers both cases without a branch.
Complex punctured_disk_log_kernel(const Rational& alpha, Complex s);

/// A complex value carried as log-magnitude + argument, for assembling series
/// terms whose factors individually overflow double precision.
struct LogComplex {
    double log_abs;
    double arg;

    Complex value() const;
};

/// Kernel for the m-fold scaled weight m*phi on the given base, in log form.
/// Constant weights pair with either base, NegLogAbs with the punctured disk,
/// NegLogOneMinusSq with the disk.
LogComplex scaled_base_kernel_log(BaseDomain base, const WeightSpec& weight, int m, Complex s);

/// Same kernel as a plain complex value (use only where magnitudes are tame).
Complex scaled_base_kernel(BaseDomain base, const WeightSpec& weight, int m, Complex s);

/// Moment-series ground-truth kernel: sum_{n=min_index}^{max_index} s^n / m_n
/// with m_n from radial_moment (quadrature), the orthonormal-monomial
/// expansion of the weighted kernel. Independent of every closed form above.
Complex oracle_radial_kernel(BaseDomain base, const WeightSpec& weight, Complex s, int min_index,
                             int max_index);

} // namespace hartogs
