#pragma once

#include <array>
#include <functional>
#include <vector>

#include "planeq/plane.hpp"

namespace planeq {

/// Time-dependent energy scale E(t) driving the rotational evolution; hbar
/// stays configurable and defaults to 1.
struct EnergyProfile {
    std::function<double(double)> energy;
    double hbar = 1.0;

    static EnergyProfile constant(double value, double hbar = 1.0) {
        return {[value](double) { return value; }, hbar};
    }
};

/// (1/hbar) Int_{t0}^{t} E dt', by composite Simpson with n subintervals.
double accumulated_phase(const EnergyProfile& profile, double t0, double t,
                         int n = 1024);

/// Evolution operator U(t, t0) = R(accumulated phase); orthogonal with det 1,
/// obeys the composition rule U(t2,t1) U(t1,t0) = U(t2,t0).
Mat2 evolution_rotation(const EnergyProfile& profile, double t0, double t,
                        int n = 1024);

/// State angle after closed evolution: phi + accumulated phase.
double propagate_state(double phi, const EnergyProfile& profile, double t0,
                       double t, int n = 1024);

/// Heisenberg picture for a time-independent observable: U^T A U.
SymObservable heisenberg_propagate(const SymObservable& a,
                                   const EnergyProfile& profile, double t0,
                                   double t, int n = 1024);

/// Diagonal Lindblad damping rates; consistency of the two-dimensional
/// closure forces h2 = 0, and validate() rejects anything else.
struct LindbladParams {
    double h1 = 0.0;
    double h2 = 0.0;
    double h3 = 0.0;
    EnergyProfile energy = EnergyProfile::constant(0.0);

    void validate() const;
};

struct LindbladRates {
    double dr_dt;
    double dphi_dt;
};

/// Right-hand side of the reduced system
///   dphi/dt = (h1 - h3)/2 sin(4 phi) - E/hbar,
///   dr/dt   = r [ (h3 - h1) cos(4 phi) - (h3 + h1) ].
LindbladRates lindblad_rhs(double r, double phi, const LindbladParams& params,
                           double t);

struct TrajectorySample {
    double t;
    double r;
    double phi;      ///< continuous (unwrapped) angle
    double entropy;
    /// Int_{t0}^{t} cos(4 phi) dt', carried along the integration; feeds the
    /// exponential-of-integral expression for r(t).
    double cos4phi_integral;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;

    const TrajectorySample& front() const { return samples.front(); }
    const TrajectorySample& back() const { return samples.back(); }
};

/// Fixed-step RK4 on (r, phi) from t0 to t1. r is clamped to [0, 1] when
/// within 1e-9 of the boundary and the step is rejected (validation_error)
/// if it lands further outside.
Trajectory lindblad_integrate(double r0, double phi0, const LindbladParams& params,
                              double t0, double t1, double dt);

/// |d/dt <theta| rho_{r,phi} |theta>  -  classical drift|, where the first
/// term uses the Lindblad rates and the second the closed-form
///   r E/hbar sin2(phi-theta) - r h1 cos2phi cos2theta - r h3 sin2phi sin2theta.
/// The two agree identically (exact Ehrenfest property).
double semiclassical_residual(double r, double phi, double theta,
                              const LindbladParams& params, double t);

/// Residual matrices of the sl(2,R) brackets
///   [sigma1, tau2] - 2 sigma3, [tau2, sigma3] - 2 sigma1, [sigma3, sigma1] + 2 tau2;
/// all exactly zero in integer arithmetic.
std::array<Mat2, 3> sl2r_commutator_residuals();

}  // namespace planeq
