#pragma once

#include "ewave/core.hpp"
#include "ewave/lame.hpp"

namespace ewave {

/// Fundamental solution of the 3D Helmholtz equation, e^{i kappa r} / (4 pi r).
inline cplx helmholtz_fundamental(const Vec3& x, const Vec3& z, double kappa) {
    const double r = (x - z).norm();
    require(r > 0.0, "helmholtz_fundamental: x == z is singular");
    return std::exp(I * kappa * r) / (4.0 * M_PI * r);
}

/**
 * beta(r, omega) = e^{i ks r}(i ks r - 1) - e^{i kp r}(i kp r - 1).
 * The two -1 terms cancel through O(r); below kappa_s r = 1e-3 the
 * difference is evaluated by its Taylor series (through r^4) instead,
 * where double-precision cancellation would otherwise dominate.
 */
inline cplx green_beta(double r, double omega, const LameParameters& lame) {
    const double ks = lame.kappa_s(omega), kp = lame.kappa_p(omega);
    if (ks * r < 1e-3) {
        // (i kappa r - 1) e^{i kappa r} = -1 + sum_{k>=2} (k-1)/k! (i kappa r)^k
        const cplx zs = I * ks * r, zp = I * kp * r;
        cplx beta = 0.0;
        cplx pws = zs, pwp = zp;
        double fact = 1.0;
        for (int k = 2; k <= 4; ++k) {
            pws *= zs;
            pwp *= zp;
            fact *= k;
            beta += ((k - 1) / fact) * (pws - pwp);
        }
        return beta;
    }
    return std::exp(I * ks * r) * (I * ks * r - 1.0) - std::exp(I * kp * r) * (I * kp * r - 1.0);
}

struct GreenParts {
    Mat3c g1, g2, g3;
    Mat3c sum() const { return g1 + g2 + g3; }
};

/**
 * Three-part split of the elastic Green tensor:
 *   G1 = (cs^2/4pi) (e^{i ks r}/r) I
 *   G2 = (cp^2 e^{i kp r} - cs^2 e^{i ks r})/(4 pi r^3) d (x) d
 *   G3 = omega^-2 beta/(4 pi r^5) [ r^2 I - 3 d (x) d ],  d = x - z.
 */
inline GreenParts green_tensor_parts(const Vec3& x, const Vec3& z, double omega,
                                     const LameParameters& lame) {
    require(omega > 0.0, "green_tensor_parts: omega must be > 0");
    const Vec3 d = x - z;
    const double r = d.norm();
    require(r > 0.0, "green_tensor_parts: x == z is singular");

    const double cp = lame.cp(), cs = lame.cs();
    const double kp = lame.kappa_p(omega), ks = lame.kappa_s(omega);
    const cplx es = std::exp(I * ks * r), ep = std::exp(I * kp * r);

    GreenParts parts;
    const Mat3c Id = Mat3c::identity();
    const Mat3c dd = Mat3c::outer(d);

    parts.g1 = (cs * cs / (4.0 * M_PI) * es / r) * Id;
    parts.g2 = ((cp * cp * ep - cs * cs * es) / (4.0 * M_PI * r * r * r)) * dd;
    const cplx beta = green_beta(r, omega, lame);
    const cplx c3 = beta / (omega * omega * 4.0 * M_PI * std::pow(r, 5));
    parts.g3 = c3 * ((r * r) * Id - 3.0 * dd);
    return parts;
}

/// Elastic Green tensor G(x, z, omega), evaluated via the closed-form split.
inline Mat3c green_tensor(const Vec3& x, const Vec3& z, double omega,
                          const LameParameters& lame) {
    return green_tensor_parts(x, z, omega, lame).sum();
}

/**
 * Far-field kernels of G: for |x| -> infinity along direction x_hat,
 *   G(x,z) = (e^{i kp |x|}/|x|) P(x_hat,z) + (e^{i ks |x|}/|x|) S(x_hat,z) + O(|x|^-2)
 * with P = (cp^2/4pi) x_hat(x)x_hat e^{-i kp x_hat.z} and
 *      S = (cs^2/4pi) (I - x_hat(x)x_hat) e^{-i ks x_hat.z}.
 */
struct FarFieldKernels {
    Mat3c p_part, s_part;
};

inline FarFieldKernels farfield_kernel(const Vec3& x_hat, const Vec3& z, double omega,
                                       const LameParameters& lame) {
    require(std::abs(x_hat.norm() - 1.0) <= 1e-12, "farfield_kernel: direction must be unit");
    const double cp = lame.cp(), cs = lame.cs();
    const Mat3c proj = Mat3c::outer(x_hat);
    const Mat3c orth = Mat3c::identity() - proj;
    const cplx php = std::exp(-I * lame.kappa_p(omega) * x_hat.dot(z));
    const cplx phs = std::exp(-I * lame.kappa_s(omega) * x_hat.dot(z));
    return {(cp * cp / (4.0 * M_PI) * php) * proj, (cs * cs / (4.0 * M_PI) * phs) * orth};
}

/**
 * Value of the singular self-cell: the integral of G over the cube of side h
 * centered on the singularity. The 1/r static part integrates in closed form
 * (cubic symmetry reduces it to the scalar cube integral of 1/r); the bounded
 * remainder has the direction-independent limit i omega (2 cs^3 + cp^3)/(12 pi) I
 * at the cell center.
 */
inline Mat3c green_self_cell(double h, double omega, const LameParameters& lame) {
    const double cp = lame.cp(), cs = lame.cs();
    const double stat = (2.0 * cs * cs + cp * cp) / 3.0 * unit_cube_inv_r_integral() * h * h /
                        (4.0 * M_PI);
    const cplx dyn = I * omega * (2.0 * cs * cs * cs + cp * cp * cp) * h * h * h / (12.0 * M_PI);
    return (stat + dyn) * Mat3c::identity();
}

}  // namespace ewave
