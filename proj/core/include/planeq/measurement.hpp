#pragma once

#include <cstdint>
#include <utility>

#include "planeq/bipartite.hpp"

namespace planeq {

/// Pointer observable A = lambda_par P(phi_par) + lambda_perp P(phi_perp)
/// with phi_perp = phi_par + pi/2, coupled impulsively at time t_m. The
/// pointer factor occupies the first tensor slot, the measured system the
/// second.
struct MeasurementSetup {
    double lambda_par = 0.0;
    double phi_par = 0.0;
    double lambda_perp = 0.0;
    double t_m = 0.0;

    double phi_perp() const;
};

/// exp(lambda tau2 (x) P) = R(lambda) (x) P + I (x) (I - P) for an
/// orthogonal projector P; the closed form of the impulsive propagator.
Mat4 exp_tau2_projector(double lambda, double proj_phi);

/// Identity for t <= t_m; for t > t_m the orthogonal operator
///   R(lambda_par) (x) P(phi_par) + R(lambda_perp) (x) P(phi_perp).
Mat4 post_interaction_evolution(const MeasurementSetup& setup, double t);

enum class Orientation { parallel, perpendicular };

struct OutcomeRecord {
    Orientation outcome;
    double pointer_angle;  ///< rotation acquired by the pointer
    double probability;
};

/// Outcome law for a system prepared in |phi_s> with the pointer at
/// |phi_M = 0>: P(parallel) = cos^2(phi_s - phi_par), P(perpendicular) =
/// sin^2(phi_s - phi_par). Amplitudes are read off the post-interaction
/// state expanded in {|lambda_par>|phi_par>, |lambda_perp>|phi_perp>}.
std::pair<OutcomeRecord, OutcomeRecord> measure(const MeasurementSetup& setup,
                                                double phi_s);

struct SampleCounts {
    std::uint64_t parallel = 0;
    std::uint64_t perpendicular = 0;
    std::uint64_t seed = 0;
};

/// Draws n outcomes with a seeded mt19937_64; identical seeds give identical
/// counts on any platform.
SampleCounts sample_outcomes(const MeasurementSetup& setup, double phi_s,
                             std::uint64_t n, std::uint64_t seed);

}  // namespace planeq
