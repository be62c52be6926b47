#include "hartogs/montecarlo.hpp"

#include <cmath>
#include <thread>
#include <vector>

namespace hartogs {

namespace {

struct ShardAccumulator {
    Complex sum{0.0, 0.0};
    double sum_sq = 0.0; // sum of |Y|^2
    std::uint64_t accepted = 0;
};

double fiber_bounding_radius(const WeightSpec& weight) {
    if (const auto* c = weight.as_constant()) return std::exp(-c->c);
    return 1.0; // |z|^alpha and (1-|z|^2)^beta are both bounded by 1
}

} // namespace

Complex sample_disk(Rng& rng, double radius) {
    const double r = radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * M_PI * rng.uniform();
    return std::polar(r, theta);
}

double bounding_volume(const McDomain& domain) {
    if (const auto* ball = std::get_if<LpBallDomain>(&domain))
        return std::pow(M_PI, ball->N); // unit polydisk
    const auto& spec = std::get<HartogsSpec>(domain);
    const double rmax = fiber_bounding_radius(spec.weight);
    return M_PI * std::pow(M_PI * rmax * rmax, spec.fiber_dim);
}

MCEstimate mc_integrate(const McDomain& domain, const McIntegrand& integrand,
                        std::uint64_t n_samples, std::uint64_t seed, int shard_count, int jobs) {
    if (n_samples == 0 || shard_count < 1) throw DomainError("mc_integrate: bad sample/shard count");
    const double volume = bounding_volume(domain);

    const LpBallDomain* ball = std::get_if<LpBallDomain>(&domain);
    const HartogsSpec* spec = std::get_if<HartogsSpec>(&domain);
    const int N = ball ? ball->N : spec->fiber_dim;
    const double rmax = spec ? fiber_bounding_radius(spec->weight) : 1.0;

    std::vector<ShardAccumulator> acc(static_cast<std::size_t>(shard_count));
    auto run_shard = [&](int shard) {
        Rng rng = Rng::shard_stream(seed, static_cast<std::uint64_t>(shard));
        const std::uint64_t base = n_samples / static_cast<std::uint64_t>(shard_count);
        const std::uint64_t extra =
            static_cast<std::uint64_t>(shard) < n_samples % static_cast<std::uint64_t>(shard_count) ? 1 : 0;
        const std::uint64_t count = base + extra;
        ShardAccumulator& slot = acc[static_cast<std::size_t>(shard)];
        std::vector<Complex> w(static_cast<std::size_t>(N));
        for (std::uint64_t i = 0; i < count; ++i) {
            Complex z(0.0, 0.0);
            // fixed draw count per sample keeps shard streams aligned
            if (spec) z = sample_disk(rng);
            for (auto& wk : w) wk = sample_disk(rng, rmax);
            bool inside;
            if (ball) {
                inside = lp_norm(w.data(), N, ball->p) < 1.0;
            } else {
                inside = in_base_domain(spec->base, z) &&
                         lp_norm(w.data(), N, spec->norm_p) < fiber_radius(spec->weight, z);
            }
            if (!inside) continue;
            const Complex y = volume * integrand(z, std::span<const Complex>(w));
            slot.sum += y;
            slot.sum_sq += std::norm(y);
            ++slot.accepted;
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

    // combine in shard order; the accepted-sample indicator contributes the
    // rejected zeros to the variance through the n_samples denominator
    Complex total(0.0, 0.0);
    double total_sq = 0.0;
    std::uint64_t accepted = 0;
    for (const ShardAccumulator& slot : acc) {
        total += slot.sum;
        total_sq += slot.sum_sq;
        accepted += slot.accepted;
    }
    if (accepted == 0) throw DomainError("mc_integrate: no samples accepted (degenerate domain)");

    MCEstimate est;
    est.samples = n_samples;
    est.accepted = accepted;
    est.seed = seed;
    const double n = static_cast<double>(n_samples);
    est.mean = total / n;
    const double var = std::fmax(0.0, (total_sq - n * std::norm(est.mean)) / (n - 1.0));
    est.stderr_ = std::sqrt(var / n);
    return est;
}

} // namespace hartogs
