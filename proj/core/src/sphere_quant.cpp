#include "planeq/sphere_quant.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "planeq/angle.hpp"
#include "planeq/quadrature.hpp"

namespace planeq {

SphereFunction::SphereFunction(std::function<double(double, double)> eval)
    : eval_(std::move(eval)) {}

SphereFunction SphereFunction::with_coeffs(std::function<double(double, double)> eval,
                                           SphereCoeffs coeffs) {
    SphereFunction f(std::move(eval));
    f.coeffs_ = coeffs;
    f.has_coeffs_ = true;
    return f;
}

void SphereGrid::validate() const {
    if (n_theta < 8 || n_phi < 8) {
        throw std::invalid_argument("SphereGrid: node counts must be >= 8");
    }
}

CMat2 rho_s2(double r, double theta, double phi) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("rho_s2: r must lie in [0, 1]");
    }
    const double ct = std::cos(theta), st = std::sin(theta);
    const complexd off = 0.5 * r * st * std::polar(1.0, -phi);
    return {0.5 * (1.0 + r * ct), off, std::conj(off), 0.5 * (1.0 - r * ct)};
}

CMat2 rho_bloch(const Vec3& bloch) {
    if (bloch.norm() > 1.0 + 1e-12) {
        throw std::invalid_argument("rho_bloch: Bloch vector must have norm <= 1");
    }
    const complexd off(0.5 * bloch.x, -0.5 * bloch.y);
    return {0.5 * (1.0 + bloch.z), off, std::conj(off), 0.5 * (1.0 - bloch.z)};
}

CMat2 rho_s2_general(const Vec3& bloch, double theta, double phi) {
    const CMat2 d = d_half(xi_for_direction(theta, phi).conjugate());
    return d * rho_bloch(bloch) * d.adjoint();
}

CMat2 resolution_matrix_s2_general(const Vec3& bloch, const SphereGrid& grid) {
    grid.validate();
    const auto nodes = gauss_legendre(grid.n_theta);
    const double hp = two_pi / grid.n_phi;
    CMat2 acc = CMat2::zero();
    for (const auto& node : nodes) {
        const double theta = std::acos(node.x);
        CMat2 row = CMat2::zero();
        for (int k = 0; k < grid.n_phi; ++k) {
            row = row + rho_s2_general(bloch, theta, (k + 0.5) * hp);
        }
        acc = acc + row * node.w;
    }
    return acc * (1.0 / grid.n_phi);
}

double resolution_residual_s2(double r, const SphereGrid& grid) {
    grid.validate();
    const auto nodes = gauss_legendre(grid.n_theta);
    const double hp = two_pi / grid.n_phi;
    CMat2 acc = CMat2::zero();
    for (const auto& node : nodes) {
        const double theta = std::acos(node.x);
        CMat2 row = CMat2::zero();
        for (int k = 0; k < grid.n_phi; ++k) {
            row = row + rho_s2(r, theta, (k + 0.5) * hp);
        }
        acc = acc + row * node.w;
    }
    // measure sin t dt dp / (2 pi) = du dp / (2 pi)
    return (acc * (1.0 / grid.n_phi)).max_abs_diff(CMat2::identity());
}

SphereCoeffs sphere_coeffs(const SphereFunction& f, const SphereGrid& grid) {
    grid.validate();
    if (f.has_exact_coeffs()) return f.exact_coeffs();
    const auto nodes = gauss_legendre(grid.n_theta);
    const double hp = two_pi / grid.n_phi;
    double mean = 0.0, cc = 0.0;
    complexd cs{0.0, 0.0};
    for (const auto& node : nodes) {
        const double u = node.x;
        const double theta = std::acos(u);
        const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
        double s0 = 0.0, c0 = 0.0;
        complexd sphase{0.0, 0.0};
        for (int k = 0; k < grid.n_phi; ++k) {
            const double phi = (k + 0.5) * hp;
            const double v = f(theta, phi);
            s0 += v;
            c0 += v * u;
            sphase += v * std::polar(1.0, -phi);
        }
        mean += node.w * s0;
        cc += node.w * c0;
        cs += node.w * st * sphase;
    }
    // (1/4pi) * (du weight) * (2pi/n_phi) sums = sums / (2 n_phi)
    const double scale = 0.5 / grid.n_phi;
    return {mean * scale, cc * scale, cs * scale};
}

CMat2 quantize_s2(const SphereFunction& f, double r, const SphereGrid& grid) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("quantize_s2: r must lie in [0, 1]");
    }
    const SphereCoeffs c = sphere_coeffs(f, grid);
    return {complexd(c.mean + r * c.cc, 0.0), r * c.cs,
            r * std::conj(c.cs), complexd(c.mean - r * c.cc, 0.0)};
}

CMat2 magnetic_hamiltonian(const MagneticConfig& cfg) {
    const double k = -(cfg.r / 3.0) * cfg.gamma * cfg.j_magnitude;
    const CMat2 bs = pauli1() * cfg.field.x + pauli2() * cfg.field.y +
                     pauli3() * cfg.field.z;
    return bs * k;
}

CMat2 magnetic_hamiltonian_quantized(const MagneticConfig& cfg,
                                     const SphereGrid& grid) {
    const double gj = cfg.gamma * cfg.j_magnitude;
    const Vec3 b = cfg.field;
    SphereFunction h([gj, b](double theta, double phi) {
        return -gj * b.dot(sphere_direction(theta, phi));
    });
    return quantize_s2(h, cfg.r, grid);
}

double magnetic_energy(const MagneticConfig& cfg) {
    const double scale = cfg.field.norm() + 1.0;
    if (std::abs(cfg.field.x) > 1e-12 * scale || std::abs(cfg.field.z) > 1e-12 * scale) {
        throw std::invalid_argument("magnetic_energy: field must point along +j");
    }
    return -(cfg.r / 3.0) * cfg.gamma * cfg.j_magnitude * cfg.field.y;
}

Mat2 magnetic_pseudo_hamiltonian(const MagneticConfig& cfg) {
    return tau2_mat * magnetic_energy(cfg);
}

double prob_dist_s2(double r, double theta0, double phi0, double theta1,
                    double phi1) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("prob_dist_s2: r must lie in [0, 1]");
    }
    const double c = sphere_direction(theta0, phi0).dot(sphere_direction(theta1, phi1));
    return 0.5 * (1.0 + r * r * c);
}

}  // namespace planeq
