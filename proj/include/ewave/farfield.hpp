#pragma once

#include <string>
#include <vector>

#include "ewave/greens.hpp"
#include "ewave/lippmann.hpp"

namespace ewave {

enum class OrderTag { Born1, Born2, BornTail, Full };

inline std::string to_string(OrderTag t) {
    switch (t) {
        case OrderTag::Born1: return "born-1";
        case OrderTag::Born2: return "born-2";
        case OrderTag::BornTail: return "born-tail";
        default: return "full";
    }
}

inline OrderTag order_tag_from_string(const std::string& s) {
    if (s == "born-1") return OrderTag::Born1;
    if (s == "born-2") return OrderTag::Born2;
    if (s == "born-tail") return OrderTag::BornTail;
    if (s == "full") return OrderTag::Full;
    throw EwaveError("unknown order tag: " + s);
}

/// One far-field measurement: compressional and shear patterns at (theta, x_hat, omega).
struct FarFieldRecord {
    Vec3 theta{};
    Vec3 x_hat{};
    double omega = 0.0;
    CVec3 uinf_p{};
    CVec3 uinf_s{};
    OrderTag order_tag = OrderTag::Full;
};

/**
 * Far-field patterns of -K_omega u:
 *   uinf_p = -(cp^2/4pi) (x_hat(x)x_hat)    sum_z e^{-i kp x_hat.z} rho(z) u(z) h^3
 *   uinf_s = -(cs^2/4pi) (I - x_hat(x)x_hat) sum_z e^{-i ks x_hat.z} rho(z) u(z) h^3
 * (rectangle rule; rho u is compactly supported). Feeding the total field u
 * gives the scattered-wave patterns; feeding a Born iterate u_{j-1} gives the
 * order-j patterns.
 */
inline FarFieldRecord far_field(const PotentialRealization& rho, const VectorField3C& u,
                                double omega, const LameParameters& lame, const Vec3& x_hat) {
    require(std::abs(x_hat.norm() - 1.0) <= 1e-12, "far_field: x_hat must be unit");
    require(rho.grid == u.grid, "far_field: grid mismatch");
    const Grid3& g = rho.grid;
    const double h3 = std::pow(g.h(), 3);
    const double kp = lame.kappa_p(omega), ks = lame.kappa_s(omega);

    CVec3 sum_p{}, sum_s{};
    std::size_t idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++idx) {
                const double rv = rho.values[idx];
                if (rv == 0.0) continue;
                const double xz = x_hat.dot(g.coord(i, j, k));
                const CVec3 su = u.at(idx) * cplx(rv);
                sum_p = sum_p + su * std::exp(-I * kp * xz);
                sum_s = sum_s + su * std::exp(-I * ks * xz);
            }
    const double cp = lame.cp(), cs = lame.cs();
    const Mat3c proj = Mat3c::outer(x_hat);
    const Mat3c orth = Mat3c::identity() - proj;

    FarFieldRecord rec;
    rec.x_hat = x_hat;
    rec.omega = omega;
    rec.uinf_p = proj.mul(sum_p) * cplx(-cp * cp / (4.0 * M_PI) * h3);
    rec.uinf_s = orth.mul(sum_s) * cplx(-cs * cs / (4.0 * M_PI) * h3);
    return rec;
}

/**
 * Scattered field u_sc(x) = -sum_z G(x,z) rho(z) u(z) h^3 at evaluation points
 * outside the support of rho fattened by 2h (keeps the quadrature nonsingular).
 */
inline std::vector<CVec3> scattered_field_at(const PotentialRealization& rho,
                                             const VectorField3C& u, double omega,
                                             const LameParameters& lame,
                                             const std::vector<Vec3>& points) {
    require(rho.grid == u.grid, "scattered_field_at: grid mismatch");
    const Grid3& g = rho.grid;
    const double h3 = std::pow(g.h(), 3);
    const double rmin = 2.0 * g.h();

    struct Node {
        Vec3 z;
        CVec3 ru;
    };
    std::vector<Node> nodes;
    std::size_t idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++idx)
                if (rho.values[idx] != 0.0)
                    nodes.push_back({g.coord(i, j, k), u.at(idx) * cplx(rho.values[idx])});

    std::vector<CVec3> out;
    out.reserve(points.size());
    for (const Vec3& x : points) {
        for (const auto& nd : nodes)
            require((x - nd.z).norm() >= rmin,
                    "scattered_field_at: point inside the fattened support");
        CVec3 acc{};
        for (const auto& nd : nodes) {
            const Mat3c G = green_tensor(x, nd.z, omega, lame);
            acc = acc - G.mul(nd.ru);
        }
        out.push_back(acc * cplx(h3));
    }
    return out;
}

}  // namespace ewave
