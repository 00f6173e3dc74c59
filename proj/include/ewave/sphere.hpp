#pragma once

#include <vector>

#include "ewave/core.hpp"

namespace ewave {

/**
 * Quasi-uniform Fibonacci nodes on the upper hemisphere (z > 0). The opposite
 * hemisphere is covered by Hermitian symmetry of phi_hat, so directions are
 * never duplicated antipodally.
 */
inline std::vector<Vec3> fibonacci_hemisphere(int count) {
    require(count > 0, "fibonacci_hemisphere: count must be positive");
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    std::vector<Vec3> dirs;
    dirs.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double z = (i + 0.5) / count;
        const double rxy = std::sqrt(1.0 - z * z);
        const double az = golden_angle * i;
        dirs.push_back({rxy * std::cos(az), rxy * std::sin(az), z});
    }
    return dirs;
}

}  // namespace ewave
