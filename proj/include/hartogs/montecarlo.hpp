#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>

#include "hartogs/rng.hpp"
#include "hartogs/weights.hpp"

namespace hartogs {

/// Monte Carlo estimate with its sampling provenance.
struct MCEstimate {
    Complex mean{0.0, 0.0};
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t accepted = 0;
    std::uint64_t seed = 0;
};

/// Unit l^p-ball {w in C^N : ||w||_p < 1}.
struct LpBallDomain {
    double p;
    int N;
};

/// Integration domain: a bare l^p-ball or a full Hartogs domain.
using McDomain = std::variant<LpBallDomain, HartogsSpec>;

/// Integrand of the base point z and the fiber point w (w has the domain's
/// fiber dimension; z is 0 for LpBallDomain).
using McIntegrand = std::function<Complex(Complex z, std::span<const Complex> w)>;

/// Plain uniform rejection sampling from the bounding region base x polydisk:
/// unbiased estimate of Int_domain integrand dV. Deterministic for fixed
/// (seed, shard_count); shard partial sums are combined in index order, so
/// the result does not depend on scheduling. `jobs` threads split the shards.
MCEstimate mc_integrate(const McDomain& domain, const McIntegrand& integrand,
                        std::uint64_t n_samples, std::uint64_t seed, int shard_count = 16,
                        int jobs = 1);

/// Volume of the bounding region mc_integrate samples from.
double bounding_volume(const McDomain& domain);

/// Uniform point in the disk of the given radius (two uniforms per draw).
Complex sample_disk(Rng& rng, double radius = 1.0);

} // namespace hartogs
