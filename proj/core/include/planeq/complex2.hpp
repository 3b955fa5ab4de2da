#pragma once

#include <complex>

namespace planeq {

using complexd = std::complex<double>;

struct CVec2 {
    complexd z1{0.0, 0.0};
    complexd z2{0.0, 0.0};

    CVec2() = default;
    CVec2(complexd a, complexd b) : z1(a), z2(b) {}

    CVec2 operator+(const CVec2& o) const { return {z1 + o.z1, z2 + o.z2}; }
    CVec2 operator-(const CVec2& o) const { return {z1 - o.z1, z2 - o.z2}; }
    CVec2 operator*(complexd s) const { return {z1 * s, z2 * s}; }
    CVec2 operator-() const { return {-z1, -z2}; }

    /// Hermitian inner product, antilinear in *this.
    complexd dot(const CVec2& o) const {
        return std::conj(z1) * o.z1 + std::conj(z2) * o.z2;
    }
    double norm() const { return std::sqrt(std::norm(z1) + std::norm(z2)); }
    double max_abs_diff(const CVec2& o) const {
        return std::max(std::abs(z1 - o.z1), std::abs(z2 - o.z2));
    }
};

/// Complex 2x2 matrix, row-major.
struct CMat2 {
    complexd m00{0.0, 0.0}, m01{0.0, 0.0};
    complexd m10{0.0, 0.0}, m11{0.0, 0.0};

    CMat2() = default;
    CMat2(complexd a, complexd b, complexd c, complexd d)
        : m00(a), m01(b), m10(c), m11(d) {}

    static CMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static CMat2 zero() { return {}; }

    CMat2 operator+(const CMat2& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    CMat2 operator-(const CMat2& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }
    CMat2 operator*(complexd s) const {
        return {m00 * s, m01 * s, m10 * s, m11 * s};
    }
    CMat2 operator*(const CMat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    CVec2 operator*(const CVec2& v) const {
        return {m00 * v.z1 + m01 * v.z2, m10 * v.z1 + m11 * v.z2};
    }

    CMat2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
    complexd trace() const { return m00 + m11; }
    complexd det() const { return m00 * m11 - m01 * m10; }

    double max_abs() const {
        return std::max(std::max(std::abs(m00), std::abs(m01)),
                        std::max(std::abs(m10), std::abs(m11)));
    }
    double max_abs_diff(const CMat2& o) const { return (*this - o).max_abs(); }

    /// First (second) column as a vector.
    CVec2 col(int j) const { return j == 0 ? CVec2{m00, m10} : CVec2{m01, m11}; }
};

inline CMat2 pauli1() { return {0.0, 1.0, 1.0, 0.0}; }
inline CMat2 pauli2() { return {0.0, complexd(0, -1), complexd(0, 1), 0.0}; }
inline CMat2 pauli3() { return {1.0, 0.0, 0.0, -1.0}; }

}  // namespace planeq
