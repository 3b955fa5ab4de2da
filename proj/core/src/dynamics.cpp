#include "planeq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "planeq/errors.hpp"
#include "planeq/quadrature.hpp"

namespace planeq {

double accumulated_phase(const EnergyProfile& profile, double t0, double t, int n) {
    if (t == t0) return 0.0;
    return simpson(profile.energy, t0, t, n) / profile.hbar;
}

Mat2 evolution_rotation(const EnergyProfile& profile, double t0, double t, int n) {
    return Mat2::rotation(accumulated_phase(profile, t0, t, n));
}

double propagate_state(double phi, const EnergyProfile& profile, double t0,
                       double t, int n) {
    return phi + accumulated_phase(profile, t0, t, n);
}

SymObservable heisenberg_propagate(const SymObservable& a,
                                   const EnergyProfile& profile, double t0,
                                   double t, int n) {
    const Mat2 u = evolution_rotation(profile, t0, t, n);
    return SymObservable::from_matrix(u.transpose() * a.matrix() * u);
}

void LindbladParams::validate() const {
    if (h1 < 0.0 || h2 < 0.0 || h3 < 0.0) {
        throw std::invalid_argument("LindbladParams: damping rates must be non-negative");
    }
    if (h2 != 0.0) {
        throw std::invalid_argument(
            "LindbladParams: h2 must be 0 (the two-dimensional closure is "
            "inconsistent otherwise)");
    }
    if (!energy.energy) {
        throw std::invalid_argument("LindbladParams: energy profile is not set");
    }
}

namespace {

LindbladRates rates_unchecked(double r, double phi, const LindbladParams& params,
                              double t) {
    const double e = params.energy.energy(t) / params.energy.hbar;
    const double dphi = 0.5 * (params.h1 - params.h3) * std::sin(4.0 * phi) - e;
    const double dr = r * ((params.h3 - params.h1) * std::cos(4.0 * phi) -
                           (params.h3 + params.h1));
    return {dr, dphi};
}

}  // namespace

LindbladRates lindblad_rhs(double r, double phi, const LindbladParams& params,
                           double t) {
    params.validate();
    return rates_unchecked(r, phi, params, t);
}

namespace {

struct OdeState {
    double r, phi, z;  // z accumulates cos(4 phi)
};

OdeState rhs(const OdeState& y, const LindbladParams& params, double t) {
    const LindbladRates rates = rates_unchecked(y.r, y.phi, params, t);
    return {rates.dr_dt, rates.dphi_dt, std::cos(4.0 * y.phi)};
}

OdeState axpy(const OdeState& y, double a, const OdeState& d) {
    return {y.r + a * d.r, y.phi + a * d.phi, y.z + a * d.z};
}

}  // namespace

Trajectory lindblad_integrate(double r0, double phi0, const LindbladParams& params,
                              double t0, double t1, double dt) {
    params.validate();
    if (dt <= 0.0) throw std::invalid_argument("lindblad_integrate: dt must be positive");
    if (t1 < t0) throw std::invalid_argument("lindblad_integrate: t1 must be >= t0");
    if (!(r0 >= 0.0 && r0 <= 1.0)) {
        throw std::invalid_argument("lindblad_integrate: r0 must lie in [0, 1]");
    }

    Trajectory traj;
    OdeState y{r0, phi0, 0.0};
    double t = t0;
    traj.samples.push_back({t, y.r, y.phi, entropy_from_r(y.r), y.z});

    while (t < t1 - 1e-15 * std::max(1.0, std::abs(t1))) {
        const double h = std::min(dt, t1 - t);
        const OdeState k1 = rhs(y, params, t);
        const OdeState k2 = rhs(axpy(y, 0.5 * h, k1), params, t + 0.5 * h);
        const OdeState k3 = rhs(axpy(y, 0.5 * h, k2), params, t + 0.5 * h);
        const OdeState k4 = rhs(axpy(y, h, k3), params, t + h);
        y = {y.r + h / 6.0 * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r),
             y.phi + h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi),
             y.z + h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z)};
        t += h;
        if (y.r < -1e-9 || y.r > 1.0 + 1e-9) {
            throw validation_error("lindblad_integrate: r left [0, 1]");
        }
        y.r = std::clamp(y.r, 0.0, 1.0);
        traj.samples.push_back({t, y.r, y.phi, entropy_from_r(y.r), y.z});
    }
    return traj;
}

double semiclassical_residual(double r, double phi, double theta,
                              const LindbladParams& params, double t) {
    params.validate();
    const LindbladRates rates = rates_unchecked(r, phi, params, t);
    const double lhs = 0.5 * rates.dr_dt * std::cos(2.0 * (phi - theta)) -
                       r * std::sin(2.0 * (phi - theta)) * rates.dphi_dt;
    const double e = params.energy.energy(t) / params.energy.hbar;
    const double rhs_classical =
        r * e * std::sin(2.0 * (phi - theta)) -
        r * params.h1 * std::cos(2.0 * phi) * std::cos(2.0 * theta) -
        r * params.h3 * std::sin(2.0 * phi) * std::sin(2.0 * theta);
    return std::abs(lhs - rhs_classical);
}

std::array<Mat2, 3> sl2r_commutator_residuals() {
    const auto comm = [](const Mat2& a, const Mat2& b) { return a * b - b * a; };
    return {comm(sigma1_mat, tau2_mat) - 2.0 * sigma3_mat,
            comm(tau2_mat, sigma3_mat) - 2.0 * sigma1_mat,
            comm(sigma3_mat, sigma1_mat) + 2.0 * tau2_mat};
}

}  // namespace planeq
