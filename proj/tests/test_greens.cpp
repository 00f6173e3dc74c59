#include <catch2/catch_amalgamated.hpp>

#include "ewave/greens.hpp"
#include "support/oracles.hpp"

using namespace ewave;
using oracles::TestRng;

static const LameParameters kLame{2.0, 1.0};  // cp = 1/2, cs = 1

TEST_CASE("helmholtz fundamental solution values") {
    CHECK(helmholtz_fundamental({1, 0, 0}, {0, 0, 0}, 0.0) ==
          cplx(1.0 / (4.0 * M_PI), 0.0));
    const cplx v = helmholtz_fundamental({0, 1, 0}, {0, 0, 0}, 2.0 * M_PI);
    CHECK(std::abs(v - cplx(1.0 / (4.0 * M_PI), 0.0)) < 1e-15);
    CHECK_THROWS(helmholtz_fundamental({1, 2, 3}, {1, 2, 3}, 1.0));
}

TEST_CASE("helmholtz satisfies (Lap + kappa^2) Phi = 0 at second order") {
    const double kappa = 1.0;
    const Vec3 z{0, 0, 0};
    auto f = [&](const Vec3& x) { return helmholtz_fundamental(x, z, kappa); };
    const Vec3 x0 = Vec3{0.6, 0.5, -0.63}.normalized();  // |x0 - z| = 1
    std::vector<double> hs, errs;
    for (double h : {4e-3, 2e-3, 1e-3}) {
        const cplx res = oracles::fd_laplacian(f, x0, h) + kappa * kappa * f(x0);
        hs.push_back(h);
        errs.push_back(std::abs(res));
    }
    const double order = oracles::fitted_order(hs, errs);
    CHECK(order == Catch::Approx(2.0).margin(0.2));
    CHECK(errs.back() < 1e-4);
}

TEST_CASE("green tensor symmetry and translation invariance") {
    TestRng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec3 x{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        Vec3 z{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        if ((x - z).norm() < 1e-3) z.x += 0.5;
        const double omega = rng.uniform(1.0, 30.0);
        const Mat3c G = green_tensor(x, z, omega, kLame);
        const Mat3c Gt = G.transpose();
        CHECK((G - Gt).frob() == 0.0);  // symmetric by construction, exactly

        const Vec3 a{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Mat3c Gs = green_tensor(x + a, z + a, omega, kLame);
        CHECK((G - Gs).frob() <= 1e-12 * G.frob());
    }
}

TEST_CASE("green tensor columns satisfy the Navier equation away from the source") {
    TestRng rng(5);
    const double omega = 9.0;
    const double lam_s = 2.0 * M_PI / kLame.kappa_s(omega);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const Vec3 z{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
        Vec3 x = z + rng.unit_vec() * rng.uniform(0.5 * lam_s, 2.0 * lam_s);
        for (int col = 0; col < 3; ++col) {
            auto u = [&](const Vec3& p) {
                const Mat3c G = green_tensor(p, z, omega, kLame);
                return CVec3{G(0, col), G(1, col), G(2, col)};
            };
            std::vector<double> hs, errs;
            for (double h : {lam_s / 64, lam_s / 128, lam_s / 256}) {
                const CVec3 r = oracles::fd_navier_residual(u, x, h, kLame, omega);
                hs.push_back(h);
                errs.push_back(r.norm());
            }
            const double order = oracles::fitted_order(hs, errs);
            CHECK(order == Catch::Approx(2.0).margin(0.3));
            ++checked;
        }
    }
    CHECK(checked == 60);
}

TEST_CASE("three-part split sums to the tensor and beta vanishes like r^2") {
    TestRng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec3 x{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        Vec3 z{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        if ((x - z).norm() < 1e-2) z.y += 0.7;
        const double omega = rng.uniform(0.5, 40.0);
        const GreenParts parts = green_tensor_parts(x, z, omega, kLame);
        const Mat3c G = green_tensor(x, z, omega, kLame);
        CHECK((parts.sum() - G).frob() <= 1e-13 * G.frob());
    }

    // beta ~ -(ks^2 - kp^2)/2 r^2 as r -> 0
    const double omega = 3.0;
    const double ks = kLame.kappa_s(omega), kp = kLame.kappa_p(omega);
    const double lead = -(ks * ks - kp * kp) / 2.0;
    for (double r : {1e-2, 1e-3, 1e-4}) {
        const cplx beta = green_beta(r, omega, kLame);
        CHECK(std::abs(beta.real() / (r * r) - lead) <= std::abs(lead) * (ks * r));
    }

    CHECK_THROWS(green_tensor(Vec3{1, 1, 1}, Vec3{1, 1, 1}, omega, kLame));
    CHECK_THROWS(green_tensor(Vec3{1, 0, 0}, Vec3{}, 0.0, kLame));
    CHECK_THROWS(LameParameters(1.0, -1.0));
    CHECK_THROWS(LameParameters(-3.0, 1.0));
}

TEST_CASE("beta Taylor branch matches the direct formula at the threshold") {
    const double omega = 7.0;
    const double r = 0.99e-3 / kLame.kappa_s(omega);  // just inside the Taylor branch
    const cplx taylor = green_beta(r, omega, kLame);
    const double ks = kLame.kappa_s(omega), kp = kLame.kappa_p(omega);
    const cplx direct = std::exp(I * ks * r) * (I * ks * r - 1.0) -
                        std::exp(I * kp * r) * (I * kp * r - 1.0);
    CHECK(std::abs(taylor - direct) <= 1e-8 * std::abs(direct));

    // full tensor at the same point, with the G3 part rebuilt from direct beta
    const Vec3 xin{r / std::sqrt(3.0), r / std::sqrt(3.0), r / std::sqrt(3.0)};
    const GreenParts parts = green_tensor_parts(xin, Vec3{}, omega, kLame);
    const cplx c3 = direct / (omega * omega * 4.0 * M_PI * std::pow(r, 5));
    const Mat3c g3_direct =
        c3 * ((r * r) * Mat3c::identity() - 3.0 * Mat3c::outer(xin));
    const Mat3c G_taylor = parts.sum();
    const Mat3c G_direct = parts.g1 + parts.g2 + g3_direct;
    CHECK((G_taylor - G_direct).frob() <= 1e-8 * G_direct.frob());
}

TEST_CASE("far-field kernels: projector algebra and zero-phase reduction") {
    TestRng rng(9);
    const double omega = 6.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Vec3 xh = rng.unit_vec();
        const Mat3c proj = Mat3c::outer(xh);
        const Mat3c orth = Mat3c::identity() - proj;
        CHECK((proj.mul(proj) - proj).frob() < 1e-14);
        CHECK(proj.mul(orth).frob() < 1e-14);

        const auto ker = farfield_kernel(xh, {0, 0, 0}, omega, kLame);
        const double cp = kLame.cp(), cs = kLame.cs();
        CHECK((ker.p_part - cplx(cp * cp / (4 * M_PI)) * proj).frob() < 1e-15);
        CHECK((ker.s_part - cplx(cs * cs / (4 * M_PI)) * orth).frob() < 1e-15);
    }
    CHECK_THROWS(farfield_kernel({1.0, 0.1, 0.0}, {0, 0, 0}, omega, kLame));
}

TEST_CASE("far-field form captures G up to an R^-2 remainder") {
    TestRng rng(4);
    const double omega = 5.0;
    const double lam_p = 2.0 * M_PI / kLame.kappa_p(omega);
    const Vec3 z{0.21, -0.13, 0.09};
    for (int trial = 0; trial < 4; ++trial) {
        const Vec3 xh = rng.unit_vec();
        std::vector<double> Rs, rems;
        for (int i = 0; i < 8; ++i) {
            const double R = 20.0 * lam_p * std::pow(10.0, i / 7.0);
            const Mat3c G = green_tensor(xh * R, z, omega, kLame);
            const auto ker = farfield_kernel(xh, z, omega, kLame);
            const cplx php = std::exp(I * kLame.kappa_p(omega) * R) / R;
            const cplx phs = std::exp(I * kLame.kappa_s(omega) * R) / R;
            const Mat3c ff = php * ker.p_part + phs * ker.s_part;
            Rs.push_back(R);
            rems.push_back((G - ff).frob());
        }
        const double slope = oracles::fitted_order(Rs, rems);
        CHECK(slope == Catch::Approx(-2.0).margin(0.2));
        // R^2 * remainder stays bounded
        for (std::size_t i = 0; i < Rs.size(); ++i)
            CHECK(Rs[i] * Rs[i] * rems[i] < 4.0 * Rs[0] * Rs[0] * rems[0]);
    }
}

TEST_CASE("self-cell integral matches brute-force quadrature of G over the cell") {
    const double omega = 20.0;
    for (double h : {1.0 / 32, 1.0 / 64}) {
        const int nq = 40;
        Mat3c brute{};
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j)
                for (int k = 0; k < nq; ++k) {
                    const Vec3 p{(i + 0.5) / nq * h - h / 2, (j + 0.5) / nq * h - h / 2,
                                 (k + 0.5) / nq * h - h / 2};
                    brute = brute + green_tensor(p, Vec3{}, omega, kLame);
                }
        brute = brute * cplx(std::pow(h / nq, 3));
        const Mat3c analytic = green_self_cell(h, omega, kLame);
        // remainder variation over the cell contributes O((kappa h)^2) relative
        const double ks_h = kLame.kappa_s(omega) * h;
        CHECK((brute - analytic).frob() <= 0.5 * ks_h * ks_h * analytic.frob());
    }
}
