#pragma once

#include "hartogs/weights.hpp"

namespace hartogs {

/// Radial monomial moment m_n = 2*pi * Int_{inner}^{outer} r^{2n+1} e^{-2 phi(r)} dr,
/// i.e. the squared L^2 norm of z^n against the weight density on the
/// annulus/disk, computed by adaptive Gauss-Legendre panels (n may be
/// negative on the punctured disk as long as the integral converges).
double radial_moment(const WeightSpec& weight, int n, double inner_radius = 0.0,
                     double outer_radius = 1.0);

} // namespace hartogs
