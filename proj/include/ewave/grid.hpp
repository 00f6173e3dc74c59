#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ewave/core.hpp"

namespace ewave {

/**
 * Uniform periodic sampling box: n^3 nodes, node (i,j,k) at
 * origin + h*(i,j,k), h = side/n. n must be a power of two, n >= 8.
 *
 * The physical support domain D is the central cube of half the side
 * (margin side/4 to every face), which suppresses periodization leakage.
 */
struct Grid3 {
    Vec3 origin{-0.5, -0.5, -0.5};
    double side = 1.0;
    int n = 64;

    Grid3() = default;
    Grid3(Vec3 origin_, double side_, int n_) : origin(origin_), side(side_), n(n_) {
        validate();
    }
    /// Box [-side/2, side/2)^3.
    static Grid3 centered(double side_, int n_) {
        return Grid3({-side_ / 2, -side_ / 2, -side_ / 2}, side_, n_);
    }

    void validate() const {
        require(side > 0.0, "Grid3: side must be positive");
        require(n >= 8, "Grid3: n must be >= 8");
        require((n & (n - 1)) == 0, "Grid3: n must be a power of two");
    }

    double h() const { return side / n; }
    std::size_t num_nodes() const { return std::size_t(n) * n * n; }
    std::size_t index(int i, int j, int k) const {
        return (std::size_t(i) * n + j) * n + k;
    }
    Vec3 coord(int i, int j, int k) const {
        const double hh = h();
        return {origin.x + hh * i, origin.y + hh * j, origin.z + hh * k};
    }

    /// Angular wavenumber of FFT index i along one axis (2 pi k~ / side).
    double xi(int i) const {
        int k = (i <= n / 2) ? i : i - n;
        return 2.0 * M_PI * k / side;
    }

    /// True if ball(center, radius) lies inside the support domain D
    /// (central cube with margin side/4 to the box faces).
    bool ball_in_domain(const Vec3& center, double radius) const {
        const Vec3 c = origin + Vec3{side / 2, side / 2, side / 2};  // box center
        for (int a = 0; a < 3; ++a) {
            const double lo = c[a] - side / 4, hi = c[a] + side / 4;
            if (center[a] - radius < lo || center[a] + radius > hi) return false;
        }
        return true;
    }

    bool operator==(const Grid3& o) const {
        return n == o.n && side == o.side && origin.x == o.origin.x &&
               origin.y == o.origin.y && origin.z == o.origin.z;
    }
    bool operator!=(const Grid3& o) const { return !(*this == o); }
};

}  // namespace ewave
