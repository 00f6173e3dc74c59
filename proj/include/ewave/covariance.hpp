#pragma once

#include "ewave/core.hpp"

namespace ewave {

/// Riesz constant: (2 pi)^-3 int |xi|^-m e^{i h.xi} dxi = c(m) |h|^{m-3} in 3D.
inline double riesz_constant(double m) {
    return std::pow(2.0, -m) * std::pow(M_PI, -1.5) * std::tgamma((3.0 - m) / 2.0) /
           std::tgamma(m / 2.0);
}

/// Coefficient of the log kernel at m = 3: K(r1) - K(r2) = c3 log(r2/r1).
inline double log_kernel_constant() { return 1.0 / (2.0 * M_PI * M_PI); }

/**
 * Leading-order radial covariance kernel of the stationary (phi == 1) field:
 * c(m) r^{m-3} for m in (2,3); for m = 3 the kernel is logarithmic and only
 * defined up to an additive constant, so -c3 log(r) is returned and only
 * differences of values are meaningful.
 */
inline double covariance_kernel_reference(double m, double separation) {
    require(separation > 0.0, "covariance_kernel_reference: separation must be > 0");
    require(m > 2.0 && m <= 3.0, "covariance_kernel_reference: m must lie in (2, 3]");
    if (m == 3.0) return -log_kernel_constant() * std::log(separation);
    return riesz_constant(m) * std::pow(separation, m - 3.0);
}

}  // namespace ewave
