#pragma once

#include <functional>

namespace hartogs {

/// Adaptive Gauss-Legendre integration of f over [a, b] by interval bisection.
///
/// A panel is accepted when the 15-point estimate agrees with the sum of its
/// halves to max(abs_tol, rel_tol*|whole-interval estimate|) scaled by the
/// panel's share. Endpoint algebraic singularities (r^c, c > -1) resolve
/// through a geometric chain of panels; a hard depth/panel budget turns
/// genuinely divergent integrands into a NonConvergenceError.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-13, double rel_tol = 1e-13);

} // namespace hartogs
