#pragma once

#include <string>

#include "hartogs/verify.hpp"

namespace hartogs {

/// One named check inside a verification suite.
struct SuiteCheck {
    std::string name;
    std::string kind; // "identity" or "mc"
    bool pass = false;
    double metric = 0.0;    // measured error
    double threshold = 0.0; // bound it must not exceed
    long long points = 0;
    bool has_estimate = false;
    MCEstimate estimate{};
    Complex reference{0.0, 0.0};
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    bool all_pass = true;
    std::vector<SuiteCheck> checks;
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    std::uint64_t samples = 200000;
    int shard_count = 16;
    int jobs = 1;
    int max_degree = 400;
    double tol_override = -1.0; // < 0: each check keeps its pinned tolerance
};

/// Named suites: c-constants, series-vs-closed, transform, inflation,
/// reproducing. "all" runs every suite in that order.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& options);

SuiteResult run_suite_c_constants(const SuiteOptions& options);
SuiteResult run_suite_series_vs_closed(const SuiteOptions& options);
SuiteResult run_suite_transform(const SuiteOptions& options);
SuiteResult run_suite_inflation(const SuiteOptions& options);
SuiteResult run_suite_reproducing(const SuiteOptions& options);

/// Interior point samplers shared by suites, tests and the acceptance suite.
/// All enforce a 0.9 interior margin against the relevant singular surface.
namespace samplers {

/// s with |s| in [lo, hi], uniform phase.
Complex sample_s(Rng& rng, double lo, double hi);

/// (s, t) interior for the generalized Hartogs triangle: |t|^a < 0.9 |s|^b.
PointSampler triangle_points(const Rational& q);

/// (s, t) interior for D_q = {|z|^2 + |w|^{2q} < 1} pairs of points.
PointSampler dq_points(double q);

/// (s, t1, t2) interior for D^inf_q pairs of points.
PointSampler dinfty_points(double q);

/// (s, t) with |t| < 0.9 sqrt((1-|z|^2)(1-|zeta|^2)) (ball-type fibers).
PointSampler ball_fiber_points();

/// (z, zeta, t) interior for a twisted/meromorphic Hartogs domain with
/// ||w f(z)|| < |g(z)| pairing bound.
PointSampler mero_points(const HoloFunctionSpec& f, const HoloFunctionSpec& g);

/// s on the punctured disk, |s| in [0.05, 0.9].
PointSampler punctured_s_points();

} // namespace samplers

} // namespace hartogs
