#include "hartogs/series.hpp"

#include <cmath>
#include <vector>

namespace hartogs {

namespace {

constexpr double kLnPi = 1.1447298858494001741; // log(pi)

/// Degreewise stagnation tracker with geometric tail extrapolation.
class Stagnation {
  public:
    explicit Stagnation(const TruncationPolicy& policy) : policy_(policy) {}

    // feed |degree contribution| and |partial sum|; returns true once converged
    bool advance(double delta, double sum_mag) {
        const double scale = std::fmax(1.0, sum_mag);
        double tail = 0.0;
        if (delta > 0.0 && prev_delta_ > 0.0) {
            const double ratio = std::fmin(delta / prev_delta_, 0.98);
            tail = delta * ratio / (1.0 - ratio);
        }
        est_tail_ = tail;
        if (delta <= policy_.stagnation_tol * scale && tail <= policy_.stagnation_tol * scale)
            ++quiet_degrees_;
        else
            quiet_degrees_ = 0;
        prev_delta_ = delta;
        return quiet_degrees_ >= policy_.stagnation_degrees;
    }

    double est_tail() const { return est_tail_; }

  private:
    TruncationPolicy policy_;
    double prev_delta_ = 0.0;
    double est_tail_ = 0.0;
    int quiet_degrees_ = 0;
};

[[noreturn]] void throw_unconverged(const char* who, EvalReport report) {
    report.converged = false;
    throw SeriesNonConvergence(std::string(who) + ": degree cap reached before stagnation",
                               std::move(report));
}

} // namespace

double ln_c_norm_constant(double p, const MultiIndex& n) {
    if (!(p >= 1.0)) throw DomainError("c_norm_constant: requires p >= 1");
    const int N = n.size();
    const int d = n.total_degree();
    if (std::isinf(p)) {
        double acc = N * kLnPi;
        for (int k = 0; k < N; ++k) acc -= std::log(static_cast<double>(n[k] + 1));
        return acc;
    }
    double acc = (N - 1) * std::log(2.0 / p) + N * kLnPi - std::log(static_cast<double>(N + d)) -
                 ln_gamma((2.0 * N + 2.0 * d) / p);
    for (int k = 0; k < N; ++k) acc += ln_gamma((2.0 * n[k] + 2.0) / p);
    return acc;
}

double c_norm_constant(double p, const MultiIndex& n) {
    return std::exp(ln_c_norm_constant(p, n));
}

double series_coefficient(double p, const MultiIndex& n) {
    return std::exp(-ln_c_norm_constant(p, n));
}

EvalReport hartogs_kernel(const HartogsSpec& spec, Complex s,
                          std::span<const Complex> fiber_pairings,
                          const TruncationPolicy& policy) {
    const int N = spec.fiber_dim;
    if (static_cast<int>(fiber_pairings.size()) != N)
        throw DomainError("hartogs_kernel: need one fiber pairing per fiber coordinate");
    const double p = spec.norm_p;
    const bool p_inf = spec.is_p_infinite();

    // log-magnitude/argument split of each pairing; exact zeros flagged
    std::vector<double> ln_tau(fiber_pairings.size());
    std::vector<double> arg_tau(fiber_pairings.size());
    std::vector<bool> tau_zero(fiber_pairings.size());
    for (int k = 0; k < N; ++k) {
        const Complex t = fiber_pairings[static_cast<std::size_t>(k)];
        tau_zero[static_cast<std::size_t>(k)] = (t == Complex(0.0, 0.0));
        ln_tau[static_cast<std::size_t>(k)] = tau_zero[static_cast<std::size_t>(k)] ? 0.0 : std::log(std::abs(t));
        arg_tau[static_cast<std::size_t>(k)] = tau_zero[static_cast<std::size_t>(k)] ? 0.0 : std::arg(t);
    }

    // memoized ln Gamma((2j+2)/p); for N = 1 the coefficient reduces to
    // (d+1)/pi through exact cancellation of identical table entries, which
    // is what makes the kernel bitwise p-independent in one fiber dimension
    std::vector<double> lg_table;
    auto lg = [&](int j) {
        while (static_cast<int>(lg_table.size()) <= j)
            lg_table.push_back(ln_gamma((2.0 * lg_table.size() + 2.0) / p));
        return lg_table[static_cast<std::size_t>(j)];
    };

    EvalReport report;
    Complex sum(0.0, 0.0);
    Stagnation stag(policy);
    for (int d = 0; d <= policy.max_total_degree; ++d) {
        const LogComplex base = scaled_base_kernel_log(spec.base, spec.weight, N + d, s);
        Complex degree_sum(0.0, 0.0);
        for_each_composition(N, d, [&](const std::vector<int>& n) {
            double ln_mag = base.log_abs;
            double arg = base.arg;
            for (int k = 0; k < N; ++k) {
                const int nk = n[static_cast<std::size_t>(k)];
                if (nk == 0) continue;
                if (tau_zero[static_cast<std::size_t>(k)]) return; // tau_k^{n_k} = 0
                ln_mag += nk * ln_tau[static_cast<std::size_t>(k)];
                arg += nk * arg_tau[static_cast<std::size_t>(k)];
            }
            if (p_inf) {
                ln_mag -= N * kLnPi;
                for (int k = 0; k < N; ++k)
                    ln_mag += std::log(static_cast<double>(n[static_cast<std::size_t>(k)] + 1));
            } else {
                ln_mag += (N - 1) * std::log(p / 2.0) + std::log(static_cast<double>(N + d)) +
                          lg((N + d) - 1) - N * kLnPi;
                for (int k = 0; k < N; ++k) ln_mag -= lg(n[static_cast<std::size_t>(k)]);
            }
            degree_sum += std::polar(std::exp(ln_mag), arg);
            ++report.terms_used;
        });
        sum += degree_sum;
        report.last_degree = d;
        if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
            report.value = sum;
            throw_unconverged("hartogs_kernel", report);
        }
        if (stag.advance(std::abs(degree_sum), std::abs(sum))) {
            report.value = sum;
            report.est_tail = stag.est_tail();
            report.converged = true;
            return report;
        }
    }
    report.value = sum;
    report.est_tail = stag.est_tail();
    throw_unconverged("hartogs_kernel", report);
}

std::function<Complex(int)> fiber_coefficient_stream(BaseDomain base, const WeightSpec& weight,
                                                     Complex s) {
    return [base, weight, s](int k) {
        return (1.0 + k) / M_PI * scaled_base_kernel(base, weight, 1 + k, s);
    };
}

EvalReport inflate_series(const std::function<Complex(int)>& coefficients, int N, Complex t,
                          const TruncationPolicy& policy) {
    if (N < 1) throw DomainError("inflate_series: N must be >= 1");
    const bool t_zero = (t == Complex(0.0, 0.0));
    const double pi_scale = std::pow(M_PI, 1 - N);

    EvalReport report;
    Complex sum(0.0, 0.0);
    Stagnation stag(policy);
    Complex t_pow(1.0, 0.0);
    for (int k = 0; k <= policy.max_total_degree; ++k) {
        double rising = 1.0; // (k+N-1)!/k!
        for (int i = 1; i < N; ++i) rising *= static_cast<double>(k + i);
        const Complex term = pi_scale * rising * coefficients(k + N - 1) * t_pow;
        sum += term;
        ++report.terms_used;
        report.last_degree = k;
        if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
            report.value = sum;
            throw_unconverged("inflate_series", report);
        }
        if (stag.advance(std::abs(term), std::abs(sum))) {
            report.value = sum;
            report.est_tail = stag.est_tail();
            report.converged = true;
            return report;
        }
        if (t_zero) {
            // only k = 0 contributes; feed zero deltas until stagnation fires
            t_pow = Complex(0.0, 0.0);
        } else {
            t_pow *= t;
        }
    }
    report.value = sum;
    report.est_tail = stag.est_tail();
    throw_unconverged("inflate_series", report);
}

EvalReport hartogs_kernel_p2_inflated(BaseDomain base, const WeightSpec& weight, int N, Complex s,
                                      Complex inner_product_t, const TruncationPolicy& policy) {
    return inflate_series(fiber_coefficient_stream(base, weight, s), N, inner_product_t, policy);
}

} // namespace hartogs
