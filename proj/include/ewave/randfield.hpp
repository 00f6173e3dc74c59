#pragma once

#include "ewave/fft.hpp"
#include "ewave/rng.hpp"
#include "ewave/strength.hpp"

namespace ewave {

/// Everything that determines one realization of the random potential.
struct RandomFieldSpec {
    double m = 3.0;  // order exponent of the spectral law |xi|^{-m}
    StrengthField strength;
    std::uint64_t seed = 1;
    std::uint32_t realization_index = 0;

    void validate() const {
        require(m > 2.0 && m <= 3.0, "RandomFieldSpec: m must lie in (2, 3]");
        strength.grid.validate();
    }
};

/// One sampled rough potential on a grid.
struct PotentialRealization {
    Grid3 grid;
    std::vector<double> values;
    double m = 3.0;
    std::uint64_t seed = 1;
    std::uint32_t realization_index = 0;
};

/**
 * Draw rho = sqrt(phi) * F^{-1}[ |xi|^{-m/2} What(xi) ], with What the DFT of
 * i.i.d. standard Gaussian white noise scaled by h^{-3/2} and the xi = 0 mode
 * zeroed. Deterministic given (seed, realization_index); node-addressed
 * counters make the draw independent of evaluation order.
 */
inline PotentialRealization sample_potential(const RandomFieldSpec& spec) {
    spec.validate();
    const Grid3& g = spec.strength.grid;
    const int n = g.n;
    const std::size_t N = g.num_nodes();
    const double sigma_w = std::pow(g.h(), -1.5);

    std::vector<cplx> buf(N);
    for (std::size_t idx = 0; idx < N; ++idx)
        buf[idx] = sigma_w * counter_normal(spec.seed, spec.realization_index, idx);

    fft3_forward(buf, n);

    const double expo = -spec.m / 2.0;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        const double xi2_i = g.xi(i) * g.xi(i);
        for (int j = 0; j < n; ++j) {
            const double xi2_ij = xi2_i + g.xi(j) * g.xi(j);
            for (int k = 0; k < n; ++k, ++idx) {
                const double xi2 = xi2_ij + g.xi(k) * g.xi(k);
                buf[idx] *= (xi2 == 0.0) ? 0.0 : std::pow(xi2, 0.5 * expo);
            }
        }
    }

    fft3_backward_scaled(buf, n);

    PotentialRealization out;
    out.grid = g;
    out.m = spec.m;
    out.seed = spec.seed;
    out.realization_index = spec.realization_index;
    out.values.resize(N);
    for (std::size_t p = 0; p < N; ++p) {
        const double s = spec.strength.values[p];
        out.values[p] = (s > 0.0) ? std::sqrt(s) * buf[p].real() : 0.0;
    }
    return out;
}

/// Normalized C0-infinity mollifier bump supported in |x| <= 1/4.
inline double mollifier_unit(const Vec3& x) {
    const double u2 = 16.0 * x.norm2();
    if (u2 >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u2));
}

/**
 * Spectral convolution rho * phi_eps on the grid, phi_eps(x) = eps^-3 phi(x/eps)
 * with the mollifier bump above. The sampled kernel is renormalized so its
 * discrete integral is exactly one; constants and total integrals are then
 * preserved to FFT roundoff.
 */
inline PotentialRealization mollify(const PotentialRealization& rho, double epsilon) {
    const Grid3& g = rho.grid;
    require(epsilon >= 2.0 * g.h(), "mollify: epsilon must be >= 2h (unresolvable kernel)");

    const int n = g.n;
    const std::size_t N = g.num_nodes();
    std::vector<cplx> ker(N, cplx{});
    double total = 0.0;
    // kernel sampled around the periodic origin
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const int oi = (i <= n / 2) ? i : i - n;
                const int oj = (j <= n / 2) ? j : j - n;
                const int ok = (k <= n / 2) ? k : k - n;
                const Vec3 d{oi * g.h(), oj * g.h(), ok * g.h()};
                const double v = mollifier_unit(d / epsilon);
                if (v != 0.0) {
                    ker[g.index(i, j, k)] = v;
                    total += v;
                }
            }
    require(total > 0.0, "mollify: sampled kernel vanished");
    const double norm = 1.0 / total;
    for (auto& v : ker) v *= norm;

    std::vector<cplx> buf(N);
    for (std::size_t p = 0; p < N; ++p) buf[p] = rho.values[p];
    fft3_forward(buf, n);
    fft3_forward(ker, n);
    for (std::size_t p = 0; p < N; ++p) buf[p] *= ker[p];
    fft3_backward_scaled(buf, n);

    PotentialRealization out = rho;
    for (std::size_t p = 0; p < N; ++p) out.values[p] = buf[p].real();
    return out;
}

}  // namespace ewave
