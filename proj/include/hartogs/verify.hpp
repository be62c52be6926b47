#pragma once

#include <optional>

#include "hartogs/montecarlo.hpp"
#include "hartogs/numerics.hpp"

namespace hartogs {

/// Outcome of an identity or statistical check.
struct IdentityReport {
    double max_rel_err = 0.0;
    std::vector<Complex> worst_point;
    long long points_checked = 0;
    bool pass = false;
    std::optional<MCEstimate> estimate; // present for Monte Carlo checks
    Complex reference{0.0, 0.0};        // analytic value an estimate targets
};

/// Statistical check of C(p;n) against its defining volume integral
/// Int_{||w||_p < 1} |w^n|^2 dV. Finite p uses the exactly-unbiased uniform
/// direction sampler on the simplex (the radial factor integrated in closed
/// form); p = infinity samples the polydisk directly. Pass: within 4 standard
/// errors and 1% relative.
IdentityReport check_c_constant(double p, const MultiIndex& n, std::uint64_t n_samples,
                                std::uint64_t seed, int shard_count = 16, int jobs = 1);

/// Fiber-scalar kernel of a Hartogs domain in C^2, K(z, zeta, w, eta).
using PointKernel = std::function<Complex(Complex, Complex, Complex, Complex)>;

/// Statistical check of the reproducing property
///   f(z0,w0) = Int_D K((z0,w0),(zeta,eta)) f(zeta,eta) dV
/// over an unweighted Hartogs domain in C^2. Pass: within 4 standard errors
/// and 2% relative.
IdentityReport check_reproducing(const PointKernel& kernel,
                                 const std::function<Complex(Complex, Complex)>& f, Complex z0,
                                 Complex w0, const HartogsSpec& domain, std::uint64_t n_samples,
                                 std::uint64_t seed, int shard_count = 16, int jobs = 1);

using PointEvaluator = std::function<Complex(std::span<const Complex>)>;
using PointSampler = std::function<std::vector<Complex>(Rng&)>;

/// Max relative disagreement of two evaluators over n_points sampled interior
/// points (symmetric denominator max(|lhs|,|rhs|)). Evaluator failures at a
/// sampled point are recorded and the point resampled, up to 10x n_points draws.
IdentityReport check_identity(const PointEvaluator& lhs, const PointEvaluator& rhs,
                              const PointSampler& sampler, long long n_points, double tol,
                              std::uint64_t seed);

/// Deterministic per-check stream seed derived from a suite seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace hartogs
