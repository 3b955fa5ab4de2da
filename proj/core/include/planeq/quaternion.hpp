#pragma once

#include <cmath>

#include "planeq/complex2.hpp"

namespace planeq {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    double max_abs_diff(const Vec3& o) const {
        return std::max({std::abs(x - o.x), std::abs(y - o.y), std::abs(z - o.z)});
    }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Quaternion q = (w, (x, y, z)) in scalar-vector form; multiplication
///   q q' = (w w' - v.v', w' v + w v' + v x v').
struct Quaternion {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    constexpr Quaternion(double scalar, const Vec3& v)
        : w(scalar), x(v.x), y(v.y), z(v.z) {}

    static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion pure(const Vec3& v) { return {0.0, v}; }

    constexpr Vec3 vector_part() const { return {x, y, z}; }

    constexpr Quaternion operator*(const Quaternion& o) const {
        const Vec3 v = vector_part(), u = o.vector_part();
        const Vec3 prod = o.w * v + w * u + v.cross(u);
        return {w * o.w - v.dot(u), prod};
    }
    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion conjugate() const { return {w, -x, -y, -z}; }
    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    /// conjugate / norm^2; throws for the zero quaternion.
    Quaternion inverse() const;

    double max_abs_diff(const Quaternion& o) const {
        return std::max({std::abs(w - o.w), std::abs(x - o.x), std::abs(y - o.y),
                         std::abs(z - o.z)});
    }
};

inline constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// Unit vector n(theta, phi) = (sin t cos p, sin t sin p, cos t).
Vec3 sphere_direction(double theta, double phi);

/// Rotates v by the unit quaternion xi via xi (0, v) xi^-1. Throws
/// std::invalid_argument if |xi| deviates from 1 by more than 1e-12.
Vec3 rotate_vector(const Quaternion& xi, const Vec3& v);

/// Unit quaternion (cos(theta/2), sin(theta/2) u_phi) with
/// u_phi = (-sin phi, cos phi, 0); rotates north pole k onto n(theta, phi).
Quaternion xi_for_direction(double theta, double phi);

/// Matrix view in the basis i -> i sigma1, j -> -i sigma2, k -> i sigma3:
///   [[w + iz, -y + ix], [y + ix, w - iz]].
/// A homomorphism onto SU(2) for unit quaternions.
CMat2 su2_canonical(const Quaternion& q);

/// Spin-1/2 representation matrix in the up/down basis:
///   [[w - iz, y + ix], [-y + ix, w + iz]].
/// Differs from su2_canonical by a fixed basis change (conjugation by
/// sigma1); also a homomorphism, with d_half(conj q) = d_half(q)^dagger for
/// unit q.
CMat2 d_half(const Quaternion& q);

/// |theta, phi> = (cos(theta/2), e^{i phi} sin(theta/2)); equals the first
/// column of d_half applied to the conjugate of xi_for_direction.
CVec2 spin_coherent_state(double theta, double phi);

}  // namespace planeq
