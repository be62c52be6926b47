#include "hartogs/verify.hpp"

#include <cmath>
#include <thread>

#include "hartogs/series.hpp"

namespace hartogs {

namespace {

struct ScalarShard {
    double sum = 0.0;
    double sum_sq = 0.0;
};

/// Mean/stderr of a per-sample scalar statistic over deterministic shards.
MCEstimate run_scalar_mc(std::uint64_t n_samples, std::uint64_t seed, int shard_count, int jobs,
                         const std::function<double(Rng&)>& statistic) {
    std::vector<ScalarShard> acc(static_cast<std::size_t>(shard_count));
    auto run_shard = [&](int shard) {
        Rng rng = Rng::shard_stream(seed, static_cast<std::uint64_t>(shard));
        const std::uint64_t base = n_samples / static_cast<std::uint64_t>(shard_count);
        const std::uint64_t extra =
            static_cast<std::uint64_t>(shard) < n_samples % static_cast<std::uint64_t>(shard_count) ? 1 : 0;
        ScalarShard& slot = acc[static_cast<std::size_t>(shard)];
        for (std::uint64_t i = 0; i < base + extra; ++i) {
            const double y = statistic(rng);
            slot.sum += y;
            slot.sum_sq += y * y;
        }
    };
    if (jobs <= 1) {
        for (int shard = 0; shard < shard_count; ++shard) run_shard(shard);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (int shard = t; shard < shard_count; shard += jobs) run_shard(shard);
            });
        for (auto& th : pool) th.join();
    }
    double total = 0.0, total_sq = 0.0;
    for (const ScalarShard& s : acc) {
        total += s.sum;
        total_sq += s.sum_sq;
    }
    MCEstimate est;
    est.samples = n_samples;
    est.accepted = n_samples;
    est.seed = seed;
    const double n = static_cast<double>(n_samples);
    est.mean = total / n;
    const double var = std::fmax(0.0, (total_sq - n * est.mean.real() * est.mean.real()) / (n - 1.0));
    est.stderr_ = std::sqrt(var / n);
    return est;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
    return splitmix64_next(state);
}

IdentityReport check_c_constant(double p, const MultiIndex& n, std::uint64_t n_samples,
                                std::uint64_t seed, int shard_count, int jobs) {
    const double reference = c_norm_constant(p, n);
    const int N = n.size();
    if (N > 8) throw DomainError("check_c_constant: fiber dimension capped at 8");

    std::function<double(Rng&)> statistic;
    if (std::isinf(p)) {
        // ball_inf = polydisk: acceptance is total, sample |w_k|^2 ~ U[0,1]
        const std::vector<int> entries = n.entries();
        statistic = [N, entries](Rng& rng) {
            double y = 1.0;
            for (int k = 0; k < N; ++k) {
                const double u = rng.uniform();
                double f = 1.0;
                for (int j = 0; j < entries[static_cast<std::size_t>(k)]; ++j) f *= u;
                y *= M_PI * f;
            }
            return y;
        };
    } else {
        // v_k = |w_k|^{p}-coordinates turn the ball into the simplex; the
        // radial direction integrates exactly and only the simplex direction
        // theta ~ Dirichlet(1,..,1) is sampled:
        //   C = pi^N (2/p)^N / (sum_k a_k (N-1)!) E[prod theta_k^{a_k - 1}],
        // a_k = (2 n_k + 2)/p.
        std::vector<double> a(static_cast<std::size_t>(N));
        double a_sum = 0.0;
        for (int k = 0; k < N; ++k) {
            a[static_cast<std::size_t>(k)] = (2.0 * n[k] + 2.0) / p;
            a_sum += a[static_cast<std::size_t>(k)];
        }
        double factorial = 1.0;
        for (int i = 2; i < N; ++i) factorial *= i;
        const double constant = std::pow(M_PI, N) * std::pow(2.0 / p, N) / (a_sum * factorial);
        statistic = [N, a, constant](Rng& rng) {
            double expo[8];
            double total = 0.0;
            for (int k = 0; k < N; ++k) {
                expo[k] = -std::log(rng.uniform_positive());
                total += expo[k];
            }
            double log_y = 0.0;
            for (int k = 0; k < N; ++k)
                log_y += (a[static_cast<std::size_t>(k)] - 1.0) * std::log(expo[k] / total);
            return constant * std::exp(log_y);
        };
    }

    const MCEstimate est = run_scalar_mc(n_samples, seed, shard_count, jobs, statistic);
    IdentityReport report;
    report.estimate = est;
    report.reference = Complex(reference, 0.0);
    report.points_checked = static_cast<long long>(n_samples);
    const double err = std::abs(est.mean.real() - reference);
    report.max_rel_err = err / reference;
    report.pass = err <= 4.0 * est.stderr_ + 1e-12 * reference && report.max_rel_err <= 0.01;
    return report;
}

IdentityReport check_reproducing(const PointKernel& kernel,
                                 const std::function<Complex(Complex, Complex)>& f, Complex z0,
                                 Complex w0, const HartogsSpec& domain, std::uint64_t n_samples,
                                 std::uint64_t seed, int shard_count, int jobs) {
    if (domain.fiber_dim != 1)
        throw DomainError("check_reproducing: implemented for scalar fibers (domains in C^2)");
    const Complex target = f(z0, w0);
    const McIntegrand integrand = [&](Complex zeta, std::span<const Complex> eta) {
        return kernel(z0, zeta, w0, eta[0]) * f(zeta, eta[0]);
    };
    const MCEstimate est =
        mc_integrate(McDomain(domain), integrand, n_samples, seed, shard_count, jobs);
    IdentityReport report;
    report.estimate = est;
    report.reference = target;
    report.points_checked = static_cast<long long>(n_samples);
    const double err = std::abs(est.mean - target);
    report.max_rel_err = err / std::abs(target);
    report.pass = err <= 4.0 * est.stderr_ + 1e-12 * std::abs(target) && report.max_rel_err <= 0.02;
    report.worst_point = {z0, w0};
    return report;
}

IdentityReport check_identity(const PointEvaluator& lhs, const PointEvaluator& rhs,
                              const PointSampler& sampler, long long n_points, double tol,
                              std::uint64_t seed) {
    Rng rng(seed);
    IdentityReport report;
    long long draws = 0;
    const long long draw_cap = 10 * n_points;
    while (report.points_checked < n_points) {
        if (++draws > draw_cap)
            throw NonConvergenceError("check_identity: too many evaluator failures while sampling");
        const std::vector<Complex> point = sampler(rng);
        Complex a, b;
        try {
            a = lhs(point);
            b = rhs(point);
        } catch (const DomainError&) {
            continue; // resample
        } catch (const NonConvergenceError&) {
            continue; // resample
        }
        const double denom = std::fmax(std::abs(a), std::abs(b));
        const double rel = denom == 0.0 ? 0.0 : std::abs(a - b) / denom;
        ++report.points_checked;
        if (rel >= report.max_rel_err) {
            report.max_rel_err = rel;
            report.worst_point = point;
        }
    }
    report.pass = report.max_rel_err <= tol;
    return report;
}

} // namespace hartogs
