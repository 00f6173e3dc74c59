#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ewave {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const { return *this / norm(); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Complex 3-vector.
struct CVec3 {
    cplx x{}, y{}, z{};

    cplx& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    cplx operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    CVec3 operator*(cplx s) const { return {x * s, y * s, z * s}; }

    /// Unconjugated dot product a·b = sum a_i b_i.
    cplx dot(const CVec3& o) const { return x * o.x + y * o.y + z * o.z; }
    /// Hermitian product a·conj(b).
    cplx dotc(const CVec3& o) const {
        return x * std::conj(o.x) + y * std::conj(o.y) + z * std::conj(o.z);
    }
    double norm() const { return std::sqrt(std::norm(x) + std::norm(y) + std::norm(z)); }

    CVec3 cross(const CVec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    static CVec3 from(const Vec3& v) { return {cplx(v.x), cplx(v.y), cplx(v.z)}; }
};

inline CVec3 operator*(cplx s, const CVec3& v) { return v * s; }

/// Complex 3x3 matrix, row-major.
struct Mat3c {
    std::array<cplx, 9> a{};

    cplx& operator()(int i, int j) { return a[3 * i + j]; }
    cplx operator()(int i, int j) const { return a[3 * i + j]; }

    Mat3c operator+(const Mat3c& o) const {
        Mat3c r;
        for (int i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    Mat3c operator-(const Mat3c& o) const {
        Mat3c r;
        for (int i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    Mat3c operator*(cplx s) const {
        Mat3c r;
        for (int i = 0; i < 9; ++i) r.a[i] = a[i] * s;
        return r;
    }
    Mat3c mul(const Mat3c& o) const {
        Mat3c r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                cplx s = 0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }
    CVec3 mul(const CVec3& v) const {
        CVec3 r;
        for (int i = 0; i < 3; ++i) r[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
        return r;
    }
    Mat3c transpose() const {
        Mat3c r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
    double frob() const {
        double s = 0;
        for (auto& v : a) s += std::norm(v);
        return std::sqrt(s);
    }
    static Mat3c identity() {
        Mat3c r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }
    /// Real outer product v ⊗ v promoted to complex.
    static Mat3c outer(const Vec3& v) {
        Mat3c r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = v[i] * v[j];
        return r;
    }
};

inline Mat3c operator*(cplx s, const Mat3c& m) { return m * s; }

/// Integral of 1/|u| over the unit cube [-1/2,1/2]^3 (closed form).
inline double unit_cube_inv_r_integral() {
    return 2.0 * (3.0 * std::log((1.0 + std::sqrt(3.0)) / std::sqrt(2.0)) - M_PI / 4.0);
}

struct EwaveError : std::runtime_error {
    explicit EwaveError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw EwaveError(msg);
}

}  // namespace ewave
