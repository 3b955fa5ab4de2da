#pragma once

#include <cmath>
#include <numbers>

namespace planeq {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double half_pi = 0.5 * std::numbers::pi;

/// Wraps any real angle into the circle domain [0, 2*pi).
inline double wrap_circle(double phi) {
    double w = std::fmod(phi, two_pi);
    if (w < 0.0) w += two_pi;
    if (w >= two_pi) w = 0.0;  // fmod + add can round up to 2*pi
    return w;
}

/// Wraps any real angle into the ray domain [0, pi): diametrically
/// opposed directions are identified.
inline double wrap_ray(double phi) {
    double w = std::fmod(phi, pi);
    if (w < 0.0) w += pi;
    if (w >= pi) w = 0.0;
    return w;
}

}  // namespace planeq
