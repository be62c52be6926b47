#pragma once

#include <functional>
#include <span>

#include "hartogs/base_kernels.hpp"

namespace hartogs {

/// Truncation control for the degree-by-degree series evaluation.
struct TruncationPolicy {
    int max_total_degree = 400;
    double stagnation_tol = 1e-12;
    int stagnation_degrees = 3;
};

/// Value plus truncation diagnostics of a series evaluation.
struct EvalReport {
    Complex value{0.0, 0.0};
    long long terms_used = 0;
    int last_degree = -1;
    double est_tail = 0.0;
    bool converged = false;
};

/// Thrown when the degree cap is hit before stagnation; carries the partial sum.
class SeriesNonConvergence : public NonConvergenceError {
  public:
    SeriesNonConvergence(std::string msg, EvalReport partial)
        : NonConvergenceError(std::move(msg)), partial_(partial) {}

    const EvalReport& partial() const { return partial_; }

  private:
    EvalReport partial_;
};

/// ln C(p;n): the squared-norm proportionality constant between ||f_n w^n||
/// on the Hartogs domain and the weighted base norm of f_n. Formed entirely
/// in log space: Gamma ratios at total degrees ~400 overflow double.
double ln_c_norm_constant(double p, const MultiIndex& n);

/// C(p;n) itself; it also equals Int_{||w||_p < 1} |w^n|^2 dV, the identity
/// the Monte Carlo suite checks.
double c_norm_constant(double p, const MultiIndex& n);

/// The series coefficient multiplying K_{G,(N+|n|)phi} (w conj(eta))^n;
/// reciprocal of C(p;n), formed in log space.
double series_coefficient(double p, const MultiIndex& n);

/// Bergman kernel of D^p_phi(G) by the weighted-base-kernel series, summed
/// degree by degree in graded order. `fiber_pairings` holds the per-coordinate
/// products tau_k = w_k * conj(eta_k) (length N). Stops when
/// `stagnation_degrees` consecutive degrees each contribute relatively less
/// than `stagnation_tol` and the geometric tail extrapolation is below the
/// same bound; throws SeriesNonConvergence at the degree cap.
EvalReport hartogs_kernel(const HartogsSpec& spec, Complex s,
                          std::span<const Complex> fiber_pairings,
                          const TruncationPolicy& policy = {});

/// Degree-indexed coefficient stream c_k(s) of the one-dimensional-fiber
/// kernel L(s, t) = sum_k c_k(s) t^k for the given base/weight.
std::function<Complex(int)> fiber_coefficient_stream(BaseDomain base, const WeightSpec& weight,
                                                     Complex s);

/// Inflation transform: from the 1-fiber coefficient stream to the kernel of
/// the domain with an N-dimensional l^2-ball fiber, evaluated at the pairing
/// t = <w, eta>:
///   K~ = pi^{-(N-1)} * sum_k ((k+N-1)!/k!) c_{k+N-1} t^k.
/// N = 1 is the identity transform.
EvalReport inflate_series(const std::function<Complex(int)>& coefficients, int N, Complex t,
                          const TruncationPolicy& policy = {});

/// p = 2 kernel via the 1-D stream + inflation; the independent route kept
/// alongside the full multi-index sum for cross-validation.
EvalReport hartogs_kernel_p2_inflated(BaseDomain base, const WeightSpec& weight, int N, Complex s,
                                      Complex inner_product_t, const TruncationPolicy& policy = {});

} // namespace hartogs
