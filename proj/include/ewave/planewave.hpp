#pragma once

#include "ewave/fields.hpp"
#include "ewave/lame.hpp"

namespace ewave {

enum class WaveKind { P, S };

/**
 * Incident elastic plane wave: compressional theta e^{i kp x.theta} or shear
 * theta_perp e^{i ks x.theta} with theta_perp orthogonal to theta.
 */
struct PlaneWave {
    WaveKind kind = WaveKind::P;
    Vec3 theta{0, 0, 1};
    Vec3 theta_perp{1, 0, 0};  // used for S only
    double omega = 1.0;

    void validate() const {
        require(omega > 0.0, "PlaneWave: omega must be > 0");
        require(std::abs(theta.norm() - 1.0) <= 1e-12, "PlaneWave: theta must be unit");
        if (kind == WaveKind::S) {
            require(std::abs(theta_perp.norm() - 1.0) <= 1e-12, "PlaneWave: theta_perp must be unit");
            require(std::abs(theta_perp.dot(theta)) <= 1e-12, "PlaneWave: theta_perp must be orthogonal to theta");
        }
    }

    Vec3 polarization() const { return kind == WaveKind::P ? theta : theta_perp; }
    double kappa(const LameParameters& lame) const {
        return kind == WaveKind::P ? lame.kappa_p(omega) : lame.kappa_s(omega);
    }
};

inline VectorField3C evaluate_incident(const PlaneWave& wave, const Grid3& grid,
                                       const LameParameters& lame) {
    wave.validate();
    VectorField3C out(grid);
    const double k = wave.kappa(lame);
    const Vec3 pol = wave.polarization();
    const int n = grid.n;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk, ++idx) {
                const cplx ph = std::exp(I * k * grid.coord(i, j, kk).dot(wave.theta));
                out.comp[0][idx] = pol.x * ph;
                out.comp[1][idx] = pol.y * ph;
                out.comp[2][idx] = pol.z * ph;
            }
    return out;
}

}  // namespace ewave
