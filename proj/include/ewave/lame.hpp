#pragma once

#include "ewave/core.hpp"

namespace ewave {

/**
 * Material constants of the homogeneous isotropic background.
 *
 * Slownesses: c_p = (lambda + 2 mu)^{-1/2}, c_s = mu^{-1/2}.
 * Wavenumbers at angular frequency omega: kappa_p = c_p omega, kappa_s = c_s omega.
 */
struct LameParameters {
    double lambda = 2.0;
    double mu = 1.0;

    LameParameters() = default;
    LameParameters(double lambda_, double mu_) : lambda(lambda_), mu(mu_) {
        require(mu > 0.0, "LameParameters: mu must be > 0");
        require(lambda + 2.0 * mu > 0.0, "LameParameters: lambda + 2 mu must be > 0");
    }

    double cp() const { return 1.0 / std::sqrt(lambda + 2.0 * mu); }
    double cs() const { return 1.0 / std::sqrt(mu); }
    double kappa_p(double omega) const { return cp() * omega; }
    double kappa_s(double omega) const { return cs() * omega; }
};

}  // namespace ewave
