#pragma once

#include <vector>

#include "ewave/core.hpp"
#include "ewave/grid.hpp"

namespace ewave {

/// Real scalar field on a Grid3, node-ordered (i,j,k) row-major.
struct ScalarField {
    Grid3 grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid3& g) : grid(g), values(g.num_nodes(), 0.0) {}

    double& at(int i, int j, int k) { return values[grid.index(i, j, k)]; }
    double at(int i, int j, int k) const { return values[grid.index(i, j, k)]; }
};

/// Three-component complex field on a Grid3. Component-major storage:
/// comp[c][node] so each component is FFT-able in place.
struct VectorField3C {
    Grid3 grid;
    std::array<std::vector<cplx>, 3> comp;

    VectorField3C() = default;
    explicit VectorField3C(const Grid3& g) : grid(g) {
        for (auto& c : comp) c.assign(g.num_nodes(), cplx{});
    }

    CVec3 at(std::size_t idx) const { return {comp[0][idx], comp[1][idx], comp[2][idx]}; }
    void set(std::size_t idx, const CVec3& v) {
        comp[0][idx] = v.x;
        comp[1][idx] = v.y;
        comp[2][idx] = v.z;
    }

    double norm() const {
        double s = 0;
        for (const auto& c : comp)
            for (const auto& v : c) s += std::norm(v);
        return std::sqrt(s);
    }

    VectorField3C& axpy(cplx a, const VectorField3C& o) {
        require(grid == o.grid, "VectorField3C: grid mismatch");
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < comp[c].size(); ++i) comp[c][i] += a * o.comp[c][i];
        return *this;
    }
    VectorField3C& scale(cplx a) {
        for (auto& c : comp)
            for (auto& v : c) v *= a;
        return *this;
    }
};

inline double rel_diff(const VectorField3C& a, const VectorField3C& b) {
    double num = 0, den = 0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < a.comp[c].size(); ++i) {
            num += std::norm(a.comp[c][i] - b.comp[c][i]);
            den += std::norm(b.comp[c][i]);
        }
    return std::sqrt(num / den);
}

}  // namespace ewave
