#pragma once

#include <cstdint>

#include "ewave/core.hpp"

namespace ewave {

/**
 * Philox4x32-10 counter-based generator. A (counter, key) pair maps to four
 * 32-bit words; distinct counters give independent streams, so sampling is
 * order-independent and reproducible in parallel.
 */
struct Philox4x32 {
    static constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    static constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;

    struct Out {
        std::uint32_t v[4];
    };

    static Out run(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2, std::uint32_t c3,
                   std::uint32_t k0, std::uint32_t k1) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(M0) * c0;
            const std::uint64_t p1 = std::uint64_t(M1) * c2;
            const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
            const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
            c0 = hi1 ^ c1 ^ k0;
            c1 = lo1;
            c2 = hi0 ^ c3 ^ k1;
            c3 = lo0;
            k0 += W0;
            k1 += W1;
        }
        return {{c0, c1, c2, c3}};
    }
};

/// Uniform in (0,1): (x + 1/2) / 2^32, never exactly 0 or 1.
inline double u32_to_unit(std::uint32_t x) {
    return (double(x) + 0.5) * (1.0 / 4294967296.0);
}

/**
 * One standard normal deviate per (seed, realization, element, stream)
 * address, via Philox + Box-Muller. Stateless.
 */
inline double counter_normal(std::uint64_t seed, std::uint32_t realization,
                             std::uint64_t element, std::uint32_t stream = 0) {
    const auto o = Philox4x32::run(std::uint32_t(element), std::uint32_t(element >> 32),
                                   realization, stream,
                                   std::uint32_t(seed), std::uint32_t(seed >> 32));
    const double u1 = u32_to_unit(o.v[0]);
    const double u2 = u32_to_unit(o.v[1]);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Uniform (0,1) deviate addressed the same way (stream separates it from normals).
inline double counter_uniform(std::uint64_t seed, std::uint32_t realization,
                              std::uint64_t element, std::uint32_t stream = 1) {
    const auto o = Philox4x32::run(std::uint32_t(element), std::uint32_t(element >> 32),
                                   realization, stream,
                                   std::uint32_t(seed), std::uint32_t(seed >> 32));
    return u32_to_unit(o.v[0]);
}

}  // namespace ewave
