#include "planeq/quaternion.hpp"

#include <stdexcept>

namespace planeq {

Quaternion Quaternion::inverse() const {
    const double n2 = norm2();
    if (n2 == 0.0) throw std::invalid_argument("Quaternion: zero has no inverse");
    return conjugate() * (1.0 / n2);
}

Vec3 sphere_direction(double theta, double phi) {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Vec3 rotate_vector(const Quaternion& xi, const Vec3& v) {
    if (std::abs(xi.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("rotate_vector: quaternion is not unit norm");
    }
    return (xi * Quaternion::pure(v) * xi.conjugate()).vector_part();
}

Quaternion xi_for_direction(double theta, double phi) {
    const double h = 0.5 * theta;
    return {std::cos(h), Vec3{-std::sin(phi), std::cos(phi), 0.0} * std::sin(h)};
}

CMat2 su2_canonical(const Quaternion& q) {
    return {complexd(q.w, q.z), complexd(-q.y, q.x),
            complexd(q.y, q.x), complexd(q.w, -q.z)};
}

CMat2 d_half(const Quaternion& q) {
    return {complexd(q.w, -q.z), complexd(q.y, q.x),
            complexd(-q.y, q.x), complexd(q.w, q.z)};
}

CVec2 spin_coherent_state(double theta, double phi) {
    const double h = 0.5 * theta;
    return {complexd(std::cos(h), 0.0),
            std::polar(1.0, phi) * std::sin(h)};
}

}  // namespace planeq
