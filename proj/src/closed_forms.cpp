#include "hartogs/closed_forms.hpp"

#include <cmath>

namespace hartogs {

namespace {

constexpr double kDenominatorFloor = 1e-300;

void require_nonsingular(Complex denominator, const char* who) {
    if (std::abs(denominator) < kDenominatorFloor)
        throw SingularityError(std::string(who) + ": evaluation point on the singular surface");
}

double factorial(int n) {
    double acc = 1.0;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

} // namespace

HoloFunctionSpec::HoloFunctionSpec(Monomial m) : kind_(m) {
    if (m.k < 0) throw DomainError("HoloFunctionSpec: monomial degree must be >= 0");
}

HoloFunctionSpec::HoloFunctionSpec(Polynomial p) : kind_(std::move(p)) {
    const auto& coeffs = std::get<Polynomial>(kind_).coefficients;
    bool nontrivial = false;
    for (Complex c : coeffs) nontrivial = nontrivial || (c != Complex(0.0, 0.0));
    if (!nontrivial) throw DomainError("HoloFunctionSpec: polynomial is identically zero");
}

Complex HoloFunctionSpec::operator()(Complex z) const {
    if (std::holds_alternative<One>(kind_)) return {1.0, 0.0};
    if (const auto* m = std::get_if<Monomial>(&kind_)) return int_pow(z, m->k);
    const auto& coeffs = std::get<Polynomial>(kind_).coefficients;
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex bergman_dq(double q, Complex s, Complex t) {
    if (!(q > 0.0)) throw DomainError("bergman_dq: requires q > 0");
    if (std::abs(s) >= 1.0) throw DomainError("bergman_dq: requires |s| < 1");
    const Complex root = principal_pow(1.0 - s, 1.0 / q);
    const Complex tr = t - root;
    const Complex den = q * M_PI * M_PI * principal_pow(1.0 - s, (2.0 * q - 1.0) / q) * tr * tr * tr;
    require_nonsingular(den, "bergman_dq");
    return ((q - 1.0) * t - (q + 1.0) * root) / den;
}

Complex dinfty_q_coefficient_sum(double q, Complex s, Complex t1, Complex t2) {
    if (!(q > 0.0)) throw DomainError("dinfty_q: requires q > 0");
    if (std::abs(s) >= 1.0) throw DomainError("dinfty_q: requires |s| < 1");
    const Complex root = principal_pow(1.0 - s, 1.0 / q);
    const Complex X = t1 / root;
    const Complex Y = t2 / root;
    const Complex one_minus_X = 1.0 - X;
    const Complex one_minus_Y = 1.0 - Y;
    const Complex den = M_PI * q * principal_pow(1.0 - s, 2.0 + 2.0 / q) *
                        (one_minus_X * one_minus_X * one_minus_X) *
                        (one_minus_Y * one_minus_Y * one_minus_Y);
    require_nonsingular(den, "dinfty_q");
    const Complex num = (q + 2.0) - q * X - q * Y + (q - 2.0) * X * Y;
    return num / den;
}

Complex dinfty_q(double q, Complex s, Complex t1, Complex t2) {
    return dinfty_q_coefficient_sum(q, s, t1, t2) / (M_PI * M_PI);
}

Complex hartogs_triangle(const Rational& q, Complex s, Complex t) {
    if (std::abs(s) >= 1.0) throw DomainError("hartogs_triangle: requires |s| < 1");
    if (s == Complex(0.0, 0.0)) throw SingularityError("hartogs_triangle: pole at s = 0");
    const auto a = q.num();
    const auto b = q.den();
    const Complex sb = int_pow(s, b);
    const Complex ta = int_pow(t, a);
    const Complex gap = sb - ta;
    const Complex one_minus_s = 1.0 - s;
    const Complex den = M_PI * M_PI * one_minus_s * one_minus_s * gap * gap;
    require_nonsingular(den, "hartogs_triangle");

    Complex acc = static_cast<double>(a) * int_pow(t, a - 1) * sb; // residue class r = a-1
    for (std::int64_t r = 0; r <= a - 2; ++r) {
        const FloorFrac ff = alpha_floor_frac(Rational((r + 1) * b, a));
        const double f = ff.frac();
        acc += int_pow(t, r) * int_pow(s, b - 1 - ff.floor_part) * ((1.0 - f) * s + f) *
               (static_cast<double>(1 + r) * gap + static_cast<double>(a) * ta);
    }
    return acc / den;
}

Complex mero_hartogs_rel1(const HoloFunctionSpec& f, const HoloFunctionSpec& g, int N,
                          const KernelEvaluator& weighted_base_kernel, Complex z, Complex zeta,
                          Complex t) {
    if (N < 1) throw DomainError("mero_hartogs_rel1: N must be >= 1");
    const Complex fz = f(z), gz = g(z);
    const Complex fzc = std::conj(f(zeta)), gzc = std::conj(g(zeta));
    const Complex pairing = gz * gzc - t * fz * fzc;
    const Complex den = std::pow(M_PI, N) * int_pow(pairing, N + 1);
    require_nonsingular(den, "mero_hartogs_rel1");
    return factorial(N) * int_pow(fz, N - 1) * gz * gz * weighted_base_kernel(z, zeta) *
           int_pow(fzc, N - 1) * gzc * gzc / den;
}

Complex mero_hartogs_rel2(const HoloFunctionSpec& f, const HoloFunctionSpec& g, int N,
                          const KernelEvaluator& base_kernel, Complex z, Complex zeta, Complex t) {
    if (N < 1) throw DomainError("mero_hartogs_rel2: N must be >= 1");
    const Complex fz = f(z), gz = g(z);
    const Complex fzc = std::conj(f(zeta)), gzc = std::conj(g(zeta));
    const Complex pairing = gz * gzc - t * fz * fzc;
    const Complex den = std::pow(M_PI, N) * int_pow(pairing, N + 1);
    require_nonsingular(den, "mero_hartogs_rel2");
    return factorial(N) * int_pow(fz, N) * gz * base_kernel(z, zeta) * int_pow(fzc, N) * gzc / den;
}

Complex twisted_triangle(const HoloFunctionSpec& f, int k, int N, Complex z, Complex zeta,
                         Complex t) {
    if (k < 1) throw DomainError("twisted_triangle: requires k >= 1");
    if (N < 1) throw DomainError("twisted_triangle: N must be >= 1");
    const Complex fz = f(z);
    const Complex fzc = std::conj(f(zeta));
    const Complex zk = int_pow(z, k);
    const Complex zkc = std::conj(int_pow(zeta, k));
    const Complex s = z * std::conj(zeta);
    const Complex one_minus_s = 1.0 - s;
    const Complex pairing = zk * zkc - t * fz * fzc;
    const Complex den = std::pow(M_PI, N + 1) * int_pow(pairing, N + 1) * one_minus_s * one_minus_s;
    require_nonsingular(den, "twisted_triangle");
    return factorial(N) * zk * int_pow(fz, N) * int_pow(fzc, N) * zkc / den;
}

Complex transform_kernel(const HoloFunctionSpec& f, const HoloFunctionSpec& g,
                         const KernelEvaluator& kernel_phi2, Complex z, Complex zeta) {
    const Complex gz = g(z);
    const Complex gzc = std::conj(g(zeta));
    require_nonsingular(gz, "transform_kernel");
    require_nonsingular(gzc, "transform_kernel");
    return f(z) * kernel_phi2(z, zeta) * std::conj(f(zeta)) / (gz * gzc);
}

} // namespace hartogs
