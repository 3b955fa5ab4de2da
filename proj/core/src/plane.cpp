#include "planeq/plane.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace planeq {

namespace {
constexpr double kBoundTol = 1e-12;
}

Vec2 pure_state(double phi) { return {std::cos(phi), std::sin(phi)}; }

double overlap(double eta, double phi) { return std::cos(phi - eta); }

Mat2 projector(double phi) {
    const Vec2 u = pure_state(phi);
    return outer(u, u);
}

SymObservable SymObservable::from_matrix(const Mat2& m) {
    const double scale = m.max_abs() + 1.0;
    if (std::abs(m.a01 - m.a10) > 1e-12 * scale) {
        throw std::invalid_argument("SymObservable: matrix is not symmetric");
    }
    return {0.5 * (m.a00 + m.a11), 0.5 * (m.a00 - m.a11), 0.5 * (m.a01 + m.a10)};
}

SymObservable sigma_phi(double phi) {
    return {0.0, std::cos(phi), std::sin(phi)};
}

SpectralDecomposition spectral_decompose(const SymObservable& a) {
    const double s = a.radius();
    const double phi1 = (s == 0.0) ? 0.0 : wrap_ray(0.5 * std::atan2(a.beta, a.delta));
    return {a.alpha + s, phi1, a.alpha - s, wrap_ray(phi1 + half_pi)};
}

SymObservable jordan_product(const SymObservable& a, const SymObservable& b) {
    return {a.alpha * b.alpha + a.delta * b.delta + a.beta * b.beta,
            a.alpha * b.delta + b.alpha * a.delta,
            a.alpha * b.beta + b.alpha * a.beta};
}

DensityMatrix::DensityMatrix(double r, double phi) {
    if (!(r >= -kBoundTol && r <= 1.0 + kBoundTol)) {
        throw std::invalid_argument("DensityMatrix: r = " + std::to_string(r) +
                                    " is outside [0, 1]");
    }
    r_ = std::clamp(r, 0.0, 1.0);
    phi_ = wrap_ray(phi);
}

DensityMatrix DensityMatrix::from_ab(double a, double b) {
    if (!(a >= -kBoundTol && a <= 1.0 + kBoundTol)) {
        throw std::invalid_argument("DensityMatrix: diagonal entry a = " +
                                    std::to_string(a) + " is outside [0, 1]");
    }
    const double disc = a * (1.0 - a) - b * b;
    if (disc < -kBoundTol) {
        throw std::invalid_argument(
            "DensityMatrix: negative determinant, not a physical state");
    }
    // r cos 2phi = 2a - 1, r sin 2phi = 2b
    const double r = std::min(1.0, std::hypot(2.0 * a - 1.0, 2.0 * b));
    const double phi = (r == 0.0) ? 0.0 : 0.5 * std::atan2(2.0 * b, 2.0 * a - 1.0);
    return {r, phi};
}

Mat2 DensityMatrix::matrix() const {
    const double c = 0.5 * r_ * std::cos(2.0 * phi_);
    const double s = 0.5 * r_ * std::sin(2.0 * phi_);
    return {0.5 + c, s, s, 0.5 - c};
}

double entropy_from_r(double r) {
    const auto term = [](double lam) {
        return lam > 0.0 ? -lam * std::log(lam) : 0.0;
    };
    return term(0.5 * (1.0 + r)) + term(0.5 * (1.0 - r));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_from_r(rho.r());
}

DensityMatrix rotate_density(const DensityMatrix& rho, double omega) {
    return {rho.r(), rho.phi() + omega};
}

double trace_pairing(const DensityMatrix& rho, const SymObservable& a) {
    return (rho.matrix() * a.matrix()).trace();
}

double state_probability(double phi, const DensityMatrix& rho) {
    return 0.5 * (1.0 + rho.r() * std::cos(2.0 * (phi - rho.phi())));
}

}  // namespace planeq
