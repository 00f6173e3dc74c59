#pragma once

#include <optional>

#include "ewave/fields.hpp"

namespace ewave {

/// Analytic descriptor of a smooth bump strength.
struct BumpDescriptor {
    Vec3 center{};
    double radius = 0.0;
    double amplitude = 0.0;
};

/**
 * Microlocal strength phi >= 0 on a grid. Either an analytic C0-infinity bump
 * supported in the domain D, or the uniform field used by the stationary
 * sampler validation mode (which deliberately fills the whole periodic box).
 */
struct StrengthField {
    Grid3 grid;
    std::vector<double> values;
    std::optional<BumpDescriptor> bump;  // set when constructed analytically
    bool uniform_validation_mode = false;

    double at(std::size_t idx) const { return values[idx]; }
};

/// phi(x) = A exp(1 - 1/(1 - |x-c|^2/r^2)) inside the ball, 0 outside.
inline double bump_value(const Vec3& x, const BumpDescriptor& b) {
    const double u2 = (x - b.center).norm2() / (b.radius * b.radius);
    if (u2 >= 1.0) return 0.0;
    return b.amplitude * std::exp(1.0 - 1.0 / (1.0 - u2));
}

inline StrengthField bump_strength(const Grid3& grid, const Vec3& center, double radius,
                                   double amplitude) {
    require(radius > 0.0, "bump_strength: radius must be positive");
    require(amplitude >= 0.0, "bump_strength: amplitude must be >= 0");
    require(grid.ball_in_domain(center, radius),
            "bump_strength: ball(center, radius) escapes the support domain D");
    StrengthField f;
    f.grid = grid;
    f.values.resize(grid.num_nodes());
    f.bump = BumpDescriptor{center, radius, amplitude};
    const int n = grid.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                f.values[grid.index(i, j, k)] = bump_value(grid.coord(i, j, k), *f.bump);
    return f;
}

/// Constant strength over the full periodic box. Stationary-spectrum
/// validation only; skips the compact-support domain rule.
inline StrengthField uniform_strength(const Grid3& grid, double value) {
    require(value >= 0.0, "uniform_strength: value must be >= 0");
    StrengthField f;
    f.grid = grid;
    f.values.assign(grid.num_nodes(), value);
    f.uniform_validation_mode = true;
    return f;
}

}  // namespace ewave
