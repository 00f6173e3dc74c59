#pragma once

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "ewave/fields.hpp"

namespace ewave {

/**
 * EWSF: versioned little-endian container for gridded fields.
 *
 * Layout (all integers little-endian):
 *   char[4]  magic "EWSF"
 *   u32      version (1)
 *   u32      dtype: 0 = f64, 1 = c128
 *   u32      rank (number of dims; 3 for volumetric fields)
 *   u32      ncomp (components per node; 1 scalar, 3 vector)
 *   u64[rank] dims
 *   f64[3]   origin
 *   f64      spacing
 *   payload: prod(dims) * ncomp values, component-major, bit-exact
 */
struct EwsfHeader {
    std::uint32_t version = 1;
    std::uint32_t dtype = 0;  // 0 f64, 1 c128
    std::uint32_t rank = 3;
    std::uint32_t ncomp = 1;
    std::vector<std::uint64_t> dims;
    double origin[3] = {0, 0, 0};
    double spacing = 0.0;

    std::uint64_t num_values() const {
        std::uint64_t n = ncomp;
        for (auto d : dims) n *= d;
        return n;
    }
    std::uint64_t payload_bytes() const { return num_values() * (dtype == 0 ? 8 : 16); }
};

namespace detail {

inline void write_bytes(std::ofstream& os, const void* p, std::size_t n) {
    os.write(static_cast<const char*>(p), std::streamsize(n));
}
inline void read_bytes(std::ifstream& is, void* p, std::size_t n) {
    is.read(static_cast<char*>(p), std::streamsize(n));
    require(std::size_t(is.gcount()) == n, "EWSF: truncated file");
}

inline void write_header(std::ofstream& os, const EwsfHeader& h) {
    write_bytes(os, "EWSF", 4);
    write_bytes(os, &h.version, 4);
    write_bytes(os, &h.dtype, 4);
    write_bytes(os, &h.rank, 4);
    write_bytes(os, &h.ncomp, 4);
    for (auto d : h.dims) write_bytes(os, &d, 8);
    write_bytes(os, h.origin, 24);
    write_bytes(os, &h.spacing, 8);
}

inline EwsfHeader read_header(std::ifstream& is) {
    char magic[4];
    read_bytes(is, magic, 4);
    require(std::memcmp(magic, "EWSF", 4) == 0, "EWSF: bad magic");
    EwsfHeader h;
    read_bytes(is, &h.version, 4);
    require(h.version == 1, "EWSF: unsupported version " + std::to_string(h.version));
    read_bytes(is, &h.dtype, 4);
    require(h.dtype <= 1, "EWSF: unknown dtype code");
    read_bytes(is, &h.rank, 4);
    require(h.rank >= 1 && h.rank <= 8, "EWSF: implausible rank");
    read_bytes(is, &h.ncomp, 4);
    require(h.ncomp >= 1 && h.ncomp <= 16, "EWSF: implausible component count");
    h.dims.resize(h.rank);
    for (auto& d : h.dims) read_bytes(is, &d, 8);
    read_bytes(is, h.origin, 24);
    read_bytes(is, &h.spacing, 8);
    return h;
}

}  // namespace detail

inline void write_ewsf(const std::string& path, const ScalarField& f) {
    std::ofstream os(path, std::ios::binary);
    require(os.good(), "EWSF: cannot open for writing: " + path);
    EwsfHeader h;
    h.dtype = 0;
    h.ncomp = 1;
    h.dims = {std::uint64_t(f.grid.n), std::uint64_t(f.grid.n), std::uint64_t(f.grid.n)};
    h.origin[0] = f.grid.origin.x;
    h.origin[1] = f.grid.origin.y;
    h.origin[2] = f.grid.origin.z;
    h.spacing = f.grid.h();
    detail::write_header(os, h);
    detail::write_bytes(os, f.values.data(), f.values.size() * 8);
    require(os.good(), "EWSF: write failed: " + path);
}

inline void write_ewsf(const std::string& path, const VectorField3C& f) {
    std::ofstream os(path, std::ios::binary);
    require(os.good(), "EWSF: cannot open for writing: " + path);
    EwsfHeader h;
    h.dtype = 1;
    h.ncomp = 3;
    h.dims = {std::uint64_t(f.grid.n), std::uint64_t(f.grid.n), std::uint64_t(f.grid.n)};
    h.origin[0] = f.grid.origin.x;
    h.origin[1] = f.grid.origin.y;
    h.origin[2] = f.grid.origin.z;
    h.spacing = f.grid.h();
    detail::write_header(os, h);
    for (const auto& c : f.comp) detail::write_bytes(os, c.data(), c.size() * 16);
    require(os.good(), "EWSF: write failed: " + path);
}

inline Grid3 grid_from_header(const EwsfHeader& h) {
    require(h.rank == 3 && h.dims[0] == h.dims[1] && h.dims[1] == h.dims[2],
            "EWSF: expected a cubic rank-3 field");
    const int n = int(h.dims[0]);
    return Grid3({h.origin[0], h.origin[1], h.origin[2]}, h.spacing * n, n);
}

inline ScalarField read_ewsf_scalar(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    require(is.good(), "EWSF: cannot open: " + path);
    const EwsfHeader h = detail::read_header(is);
    require(h.dtype == 0 && h.ncomp == 1, "EWSF: not an f64 scalar field");
    ScalarField f(grid_from_header(h));
    detail::read_bytes(is, f.values.data(), f.values.size() * 8);
    is.peek();
    require(is.eof(), "EWSF: trailing bytes after payload");
    return f;
}

inline VectorField3C read_ewsf_vector(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    require(is.good(), "EWSF: cannot open: " + path);
    const EwsfHeader h = detail::read_header(is);
    require(h.dtype == 1 && h.ncomp == 3, "EWSF: not a c128 3-vector field");
    VectorField3C f(grid_from_header(h));
    for (auto& c : f.comp) detail::read_bytes(is, c.data(), c.size() * 16);
    is.peek();
    require(is.eof(), "EWSF: trailing bytes after payload");
    return f;
}

/// Load a scalar field and require it to live on the expected grid.
inline ScalarField read_ewsf_scalar_on(const std::string& path, const Grid3& expected) {
    ScalarField f = read_ewsf_scalar(path);
    require(f.grid == expected, "EWSF: field grid does not match the expected grid");
    return f;
}

}  // namespace ewave
