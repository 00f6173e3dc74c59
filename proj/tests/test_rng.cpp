#include <catch2/catch_amalgamated.hpp>

#include "ewave/rng.hpp"

using namespace ewave;

TEST_CASE("philox4x32-10 known-answer vectors") {
    // Reference vectors from the Random123 test suite.
    auto o = Philox4x32::run(0, 0, 0, 0, 0, 0);
    CHECK(o.v[0] == 0x6627e8d5u);
    CHECK(o.v[1] == 0xe169c58du);
    CHECK(o.v[2] == 0xbc57ac4cu);
    CHECK(o.v[3] == 0x9b00dbd8u);

    o = Philox4x32::run(0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu,
                        0xffffffffu);
    CHECK(o.v[0] == 0x408f276du);
    CHECK(o.v[1] == 0x41c83b0eu);
    CHECK(o.v[2] == 0xa20bc7c6u);
    CHECK(o.v[3] == 0x6d5451fdu);

    o = Philox4x32::run(0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u, 0xa4093822u,
                        0x299f31d0u);
    CHECK(o.v[0] == 0xd16cfe09u);
    CHECK(o.v[1] == 0x94fdccebu);
    CHECK(o.v[2] == 0x5001e420u);
    CHECK(o.v[3] == 0x24126ea1u);
}

TEST_CASE("counter normals are deterministic and address-separated") {
    const double a = counter_normal(42, 0, 1234);
    const double b = counter_normal(42, 0, 1234);
    CHECK(a == b);
    CHECK(counter_normal(42, 0, 1235) != a);
    CHECK(counter_normal(42, 1, 1234) != a);
    CHECK(counter_normal(43, 0, 1234) != a);
}

TEST_CASE("counter normals have standard moments") {
    const int N = 200000;
    double s1 = 0, s2 = 0, s4 = 0;
    for (int i = 0; i < N; ++i) {
        const double x = counter_normal(7, 0, std::uint64_t(i));
        s1 += x;
        s2 += x * x;
        s4 += x * x * x * x;
    }
    const double mean = s1 / N;
    const double var = s2 / N - mean * mean;
    const double kurt = (s4 / N) / (var * var);
    CHECK(std::abs(mean) < 4.0 / std::sqrt(double(N)));
    CHECK(std::abs(var - 1.0) < 0.02);
    CHECK(std::abs(kurt - 3.0) < 0.1);
}
