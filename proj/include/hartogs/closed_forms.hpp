#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "hartogs/base_kernels.hpp"

namespace hartogs {

/// A nontrivial holomorphic function used as weight/twist data: the constant
/// one, a monomial z^k, or a polynomial with given coefficients (ascending).
class HoloFunctionSpec {
  public:
    struct One {};
    struct Monomial {
        int k; // k >= 0
    };
    struct Polynomial {
        std::vector<Complex> coefficients;
    };

    HoloFunctionSpec() : kind_(One{}) {}
    HoloFunctionSpec(Monomial m);
    HoloFunctionSpec(Polynomial p);

    static HoloFunctionSpec one() { return HoloFunctionSpec(); }
    static HoloFunctionSpec monomial(int k) { return HoloFunctionSpec(Monomial{k}); }
    static HoloFunctionSpec polynomial(std::vector<Complex> coeffs) {
        return HoloFunctionSpec(Polynomial{std::move(coeffs)});
    }

    Complex operator()(Complex z) const;

    const Monomial* as_monomial() const { return std::get_if<Monomial>(&kind_); }
    bool is_one() const { return std::holds_alternative<One>(kind_); }

  private:
    std::variant<One, Monomial, Polynomial> kind_;
};

/// Base-kernel evaluator in the two point slots (holomorphic in the first,
/// conjugate-linear in the second; all radial kernels reduce to s = z*conj(zeta)).
using KernelEvaluator = std::function<Complex(Complex z, Complex zeta)>;

/// Kernel of D_q = {|z|^2 + |w|^{2q} < 1}, q > 0, at s = z*conj(zeta),
/// t = w*conj(eta):
///   K = ((q-1) t - (q+1)(1-s)^{1/q}) / (q pi^2 (1-s)^{(2q-1)/q} (t-(1-s)^{1/q})^3).
Complex bergman_dq(double q, Complex s, Complex t);

/// Kernel of D^inf_q = {|z|^2 + ||w||_inf^{2q} < 1} in C x C^2, at
/// t_i = w_i*conj(eta_i). With X = t1 (1-s)^{-1/q}, Y = t2 (1-s)^{-1/q}:
///   K = ((q+2) - qX - qY + (q-2)XY) / (pi^3 q (1-s)^{2+2/q} (1-X)^3 (1-Y)^3).
Complex dinfty_q(double q, Complex s, Complex t1, Complex t2);

/// The closed form of the bare double coefficient sum
///   sum_{j,k} (j+1)(k+1) K_{D,(2+j+k)phi_q}(s) t1^j t2^k
/// (the l^inf series before its 1/pi^2 normalization): pi^2 * dinfty_q.
Complex dinfty_q_coefficient_sum(double q, Complex s, Complex t1, Complex t2);

/// Kernel of the generalized Hartogs triangle H_q = {|w|^q < |z| < 1},
/// q = a/b in lowest terms; rational in (s, t) with integer powers only.
/// The r-sum over residue classes is empty when a = 1.
Complex hartogs_triangle(const Rational& q, Complex s, Complex t);

/// Kernel of D = {(z,w) in G x C^N : ||w f(z)|| < |g(z)|} expressed through
/// the weighted base kernel K_{G, log|f/g|}:
///   N! f(z)^{N-1} g(z)^2 K(z,zeta) conj(f(zeta)^{N-1} g(zeta)^2)
///     / (pi^N (g(z)conj(g(zeta)) - t f(z)conj(f(zeta)))^{N+1}).
Complex mero_hartogs_rel1(const HoloFunctionSpec& f, const HoloFunctionSpec& g, int N,
                          const KernelEvaluator& weighted_base_kernel, Complex z, Complex zeta,
                          Complex t);

/// Same domain through the unweighted base kernel K_G:
///   N! f(z)^N g(z) K_G(z,zeta) conj(f(zeta)^N g(zeta)) / (pi^N (...)^{N+1}).
Complex mero_hartogs_rel2(const HoloFunctionSpec& f, const HoloFunctionSpec& g, int N,
                          const KernelEvaluator& base_kernel, Complex z, Complex zeta, Complex t);

/// Twisted Hartogs triangle D = {(z,w) in D* x C^N : ||w f(z)||^{1/k} < |z| < 1}:
/// the g = z^k case of rel2 with the disk kernel as the punctured-disk kernel.
Complex twisted_triangle(const HoloFunctionSpec& f, int k, int N, Complex z, Complex zeta,
                         Complex t);

/// Weight transformation: K_{phi1} from K_{phi2} when phi1 - phi2 = log|f| - log|g|:
///   K_{phi1}(z,zeta) = f(z) K_{phi2}(z,zeta) conj(f(zeta)) / (g(z) conj(g(zeta))).
Complex transform_kernel(const HoloFunctionSpec& f, const HoloFunctionSpec& g,
                         const KernelEvaluator& kernel_phi2, Complex z, Complex zeta);

} // namespace hartogs
