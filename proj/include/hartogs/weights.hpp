#pragma once

#include <optional>
#include <variant>

#include "hartogs/numerics.hpp"

namespace hartogs {

enum class BaseDomain {
    UnitDisk,
    PuncturedUnitDisk,
};

/// Radial weight phi on the base domain. Only the families with known
/// closed-form weighted kernels are representable; integer scaling m*phi
/// stays inside each family.
class WeightSpec {
  public:
    struct Constant {
        double c;
    };
    struct NegLogAbs { // phi(z) = -alpha * log|z|, alpha > 0 exact rational
        Rational alpha;
    };
    struct NegLogOneMinusSq { // phi(z) = -beta * log(1 - |z|^2), beta >= 0
        double beta;
    };

    WeightSpec(Constant f) : family_(f) {}
    WeightSpec(NegLogAbs f) : family_(f) {}
    WeightSpec(NegLogOneMinusSq f);

    static WeightSpec constant(double c) { return WeightSpec(Constant{c}); }
    static WeightSpec neg_log_abs(Rational alpha) { return WeightSpec(NegLogAbs{alpha}); }
    static WeightSpec neg_log_one_minus_sq(double beta) { return WeightSpec(NegLogOneMinusSq{beta}); }

    const Constant* as_constant() const { return std::get_if<Constant>(&family_); }
    const NegLogAbs* as_neg_log_abs() const { return std::get_if<NegLogAbs>(&family_); }
    const NegLogOneMinusSq* as_neg_log_one_minus_sq() const {
        return std::get_if<NegLogOneMinusSq>(&family_);
    }

  private:
    std::variant<Constant, NegLogAbs, NegLogOneMinusSq> family_;
};

/// phi(z) for z in the base domain.
double eval_phi(const WeightSpec& w, Complex z);

/// Fiber radius exp(-phi(z)).
double fiber_radius(const WeightSpec& w, Complex z);

/// m * phi, same family, parameter scaled by the integer m >= 1.
WeightSpec scale_weight(const WeightSpec& w, int m);

/// Complete N-circled p-Hartogs domain D^p_phi(G):
/// {(z, w) in G x C^N : ||w||_p < exp(-phi(z))}.
struct HartogsSpec {
    BaseDomain base;
    WeightSpec weight;
    int fiber_dim;                       // N >= 1
    double norm_p;                       // p in [1, inf]; infinity() for l^inf

    HartogsSpec(BaseDomain b, WeightSpec w, int N, double p);

    bool is_p_infinite() const;
};

/// True if z lies in the base domain (strictly inside the unit disk,
/// excluding the origin for the punctured disk).
bool in_base_domain(BaseDomain base, Complex z);

/// ||w||_p over a coordinate span, p possibly infinite.
double lp_norm(const Complex* w, int N, double p);

} // namespace hartogs
