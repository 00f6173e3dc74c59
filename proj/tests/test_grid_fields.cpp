#include <catch2/catch_amalgamated.hpp>

#include "ewave/fft.hpp"
#include "ewave/fields.hpp"
#include "ewave/grid.hpp"
#include "ewave/strength.hpp"
#include "support/oracles.hpp"

using namespace ewave;

TEST_CASE("grid invariants") {
    CHECK_THROWS(Grid3::centered(1.0, 7));
    CHECK_THROWS(Grid3::centered(1.0, 48));   // not a power of two
    CHECK_THROWS(Grid3::centered(-1.0, 16));
    const Grid3 g = Grid3::centered(2.0, 16);
    CHECK(g.h() == Catch::Approx(0.125));
    CHECK(g.coord(0, 0, 0).x == Catch::Approx(-1.0));
    CHECK(g.xi(0) == 0.0);
    CHECK(g.xi(1) == Catch::Approx(2.0 * M_PI / 2.0));
    CHECK(g.xi(15) == Catch::Approx(-2.0 * M_PI / 2.0));
    CHECK(g.ball_in_domain({0, 0, 0}, 0.49));
    CHECK_FALSE(g.ball_in_domain({0, 0, 0}, 0.51));
    CHECK_FALSE(g.ball_in_domain({0.4, 0, 0}, 0.2));
}

TEST_CASE("fft roundtrip and forward convention") {
    const int n = 8;
    std::vector<cplx> data(n * n * n);
    oracles::TestRng rng(3);
    for (auto& v : data) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto orig = data;
    fft3_forward(data, n);
    // forward uses e^{-i 2 pi k.j / n}: check one mode against a direct sum
    cplx direct = 0.0;
    const int kk[3] = {1, 2, 5};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double ph = -2.0 * M_PI * (kk[0] * i + kk[1] * j + kk[2] * k) / double(n);
                direct += orig[(std::size_t(i) * n + j) * n + k] * std::exp(I * ph);
            }
    const cplx got = data[(std::size_t(kk[0]) * n + kk[1]) * n + kk[2]];
    CHECK(std::abs(got - direct) < 1e-10);
    fft3_backward_scaled(data, n);
    double err = 0;
    for (std::size_t i = 0; i < data.size(); ++i) err = std::max(err, std::abs(data[i] - orig[i]));
    CHECK(err < 1e-13);
}

TEST_CASE("bump strength: peak, boundary, domain guard, integral") {
    const Grid3 g = Grid3::centered(1.0, 32);
    const double r0 = 0.2, A = 1.5;
    const StrengthField f = bump_strength(g, {0, 0, 0}, r0, A);

    // peak value at the center node (center lies on the grid)
    CHECK(f.values[g.index(16, 16, 16)] == Catch::Approx(A));
    // zero at and beyond the boundary
    CHECK(bump_value({r0, 0, 0}, *f.bump) == 0.0);
    CHECK(bump_value({0.21, 0, 0}, *f.bump) == 0.0);
    // smooth positive inside
    CHECK(bump_value({0.1, 0, 0}, *f.bump) > 0.0);

    // ball escaping D is rejected
    CHECK_THROWS(bump_strength(g, {0.2, 0, 0}, 0.1, 1.0));

    // integral of phi vs amplitude * radius^3 * unit-ball constant
    double sum = 0;
    for (double v : f.values) sum += v;
    sum *= std::pow(g.h(), 3);
    const double expect = A * r0 * r0 * r0 * oracles::bump_unit_ball_integral();
    CHECK(sum == Catch::Approx(expect).epsilon(1e-3));
}

TEST_CASE("bump transform oracle matches grid quadrature at moderate frequency") {
    const Grid3 g = Grid3::centered(1.0, 64);
    const BumpDescriptor b{{0, 0, 0}, 0.22, 1.0};
    const StrengthField f = bump_strength(g, b.center, b.radius, b.amplitude);
    const double s = 9.0;
    cplx grid_sum = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k) {
                const Vec3 x = g.coord(i, j, k);
                grid_sum += f.values[g.index(i, j, k)] * std::exp(-I * s * x.z);
            }
    grid_sum *= std::pow(g.h(), 3);
    const double oracle = oracles::bump_transform(s, b);
    CHECK(std::abs(grid_sum - oracle) / std::abs(oracle) < 1e-3);
}
