#include "planeq/measurement.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "planeq/rng.hpp"

namespace planeq {

double MeasurementSetup::phi_perp() const { return phi_par + half_pi; }

Mat4 exp_tau2_projector(double lambda, double proj_phi) {
    const Mat2 p = projector(proj_phi);
    return kron(Mat2::rotation(lambda), p) +
           kron(Mat2::identity(), Mat2::identity() - p);
}

Mat4 post_interaction_evolution(const MeasurementSetup& setup, double t) {
    if (t <= setup.t_m) return Mat4::identity();
    return kron(Mat2::rotation(setup.lambda_par), projector(setup.phi_par)) +
           kron(Mat2::rotation(setup.lambda_perp), projector(setup.phi_perp()));
}

std::pair<OutcomeRecord, OutcomeRecord> measure(const MeasurementSetup& setup,
                                                double phi_s) {
    const Mat4 u = post_interaction_evolution(setup, setup.t_m + 1.0);
    const Vec4 out = u * tensor(pure_state(0.0), pure_state(phi_s));
    // {|lambda_par>|phi_par>, |lambda_perp>|phi_perp>} is orthonormal because
    // the system factors are orthogonal.
    const double c_par =
        out.dot(tensor(pure_state(setup.lambda_par), pure_state(setup.phi_par)));
    const double c_perp =
        out.dot(tensor(pure_state(setup.lambda_perp), pure_state(setup.phi_perp())));
    return {OutcomeRecord{Orientation::parallel, setup.lambda_par, c_par * c_par},
            OutcomeRecord{Orientation::perpendicular, setup.lambda_perp,
                          c_perp * c_perp}};
}

SampleCounts sample_outcomes(const MeasurementSetup& setup, double phi_s,
                             std::uint64_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_outcomes: n must be >= 1");
    const double p = measure(setup, phi_s).first.probability;
    std::mt19937_64 gen(seed);
    SampleCounts counts;
    counts.seed = seed;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (uniform01(gen()) < p) {
            ++counts.parallel;
        } else {
            ++counts.perpendicular;
        }
    }
    return counts;
}

}  // namespace planeq
