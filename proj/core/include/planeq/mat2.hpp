#pragma once

#include <cmath>

namespace planeq {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }

    constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Real 2x2 matrix, row-major.
struct Mat2 {
    double a00 = 0.0, a01 = 0.0;
    double a10 = 0.0, a11 = 0.0;

    constexpr Mat2() = default;
    constexpr Mat2(double m00, double m01, double m10, double m11)
        : a00(m00), a01(m01), a10(m10), a11(m11) {}

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 zero() { return {}; }

    /// Rotation by phi (counter-clockwise).
    static Mat2 rotation(double phi) {
        const double c = std::cos(phi), s = std::sin(phi);
        return {c, -s, s, c};
    }

    constexpr Mat2 operator+(const Mat2& o) const {
        return {a00 + o.a00, a01 + o.a01, a10 + o.a10, a11 + o.a11};
    }
    constexpr Mat2 operator-(const Mat2& o) const {
        return {a00 - o.a00, a01 - o.a01, a10 - o.a10, a11 - o.a11};
    }
    constexpr Mat2 operator*(double s) const {
        return {a00 * s, a01 * s, a10 * s, a11 * s};
    }
    constexpr Mat2 operator-() const { return {-a00, -a01, -a10, -a11}; }

    constexpr Mat2 operator*(const Mat2& o) const {
        return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
                a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
    }
    constexpr Vec2 operator*(const Vec2& v) const {
        return {a00 * v.x + a01 * v.y, a10 * v.x + a11 * v.y};
    }

    constexpr Mat2 transpose() const { return {a00, a10, a01, a11}; }
    constexpr double trace() const { return a00 + a11; }
    constexpr double det() const { return a00 * a11 - a01 * a10; }

    double max_abs() const {
        return std::max(std::max(std::abs(a00), std::abs(a01)),
                        std::max(std::abs(a10), std::abs(a11)));
    }
    double max_abs_diff(const Mat2& o) const { return (*this - o).max_abs(); }
};

inline constexpr Mat2 operator*(double s, const Mat2& m) { return m * s; }

/// |u><v| outer product.
inline constexpr Mat2 outer(const Vec2& u, const Vec2& v) {
    return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
}

constexpr Mat2 sigma1_mat{0.0, 1.0, 1.0, 0.0};
constexpr Mat2 sigma3_mat{1.0, 0.0, 0.0, -1.0};
// antisymmetric generator of plane rotations (equals -i * sigma2)
constexpr Mat2 tau2_mat{0.0, -1.0, 1.0, 0.0};

}  // namespace planeq
