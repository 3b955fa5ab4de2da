#pragma once

#include "planeq/angle.hpp"
#include "planeq/mat2.hpp"

namespace planeq {

/// Unit state vector (cos phi, sin phi) labelled by its polar angle.
Vec2 pure_state(double phi);

/// Inner product of two pure states: cos(phi - eta).
double overlap(double eta, double phi);

/// Rank-one projector |phi><phi|.
Mat2 projector(double phi);

/// Symmetric 2x2 observable in the {I, sigma3, sigma1} basis:
///   A = alpha*I + delta*sigma3 + beta*sigma1.
struct SymObservable {
    double alpha = 0.0;  ///< coefficient of I
    double delta = 0.0;  ///< coefficient of sigma3
    double beta = 0.0;   ///< coefficient of sigma1

    static SymObservable identity() { return {1.0, 0.0, 0.0}; }

    /// Reads the coefficients off a symmetric matrix. Throws
    /// std::invalid_argument when the matrix is not symmetric.
    static SymObservable from_matrix(const Mat2& m);

    Mat2 matrix() const {
        return {alpha + delta, beta, beta, alpha - delta};
    }

    /// sqrt(delta^2 + beta^2); the eigenvalues are alpha +/- radius().
    double radius() const { return std::hypot(delta, beta); }
    double eigen_max() const { return alpha + radius(); }
    double eigen_min() const { return alpha - radius(); }

    SymObservable operator+(const SymObservable& o) const {
        return {alpha + o.alpha, delta + o.delta, beta + o.beta};
    }
    SymObservable operator-(const SymObservable& o) const {
        return {alpha - o.alpha, delta - o.delta, beta - o.beta};
    }
    SymObservable operator*(double s) const {
        return {alpha * s, delta * s, beta * s};
    }
};

inline SymObservable operator*(double s, const SymObservable& a) { return a * s; }

/// Orientation observable cos(phi)*sigma3 + sin(phi)*sigma1. Its eigenpairs
/// are (+1, |phi/2>) and (-1, |phi/2 + pi/2>).
SymObservable sigma_phi(double phi);

struct SpectralDecomposition {
    double lambda1;  ///< larger eigenvalue
    double phi1;     ///< its eigenray in [0, pi)
    double lambda2;
    double phi2;     ///< phi1 + pi/2 mod pi
};

/// Eigen decomposition A = lambda1 P(phi1) + lambda2 P(phi2). The degenerate
/// case (delta = beta = 0) returns phi1 = 0 by convention.
SpectralDecomposition spectral_decompose(const SymObservable& a);

/// Jordan (symmetrized) product (AB + BA)/2; closed on symmetric matrices.
SymObservable jordan_product(const SymObservable& a, const SymObservable& b);

/// Real 2x2 density matrix in polar form: rho = (I + r*sigma_{2 phi})/2 with
/// mixing radius r in [0, 1] and eigen-direction phi in [0, pi). Eigenvalues
/// are (1 +/- r)/2; the matrix is pi-periodic in phi.
class DensityMatrix {
  public:
    /// Throws std::invalid_argument when r is outside [0, 1] beyond 1e-12.
    DensityMatrix(double r, double phi);

    /// Builds from the entries rho = [[a, b], [b, 1-a]]. Rejects a outside
    /// [0, 1] and determinants below -1e-12; small negative determinants are
    /// clamped to zero.
    static DensityMatrix from_ab(double a, double b);

    static DensityMatrix maximally_mixed() { return {0.0, 0.0}; }
    static DensityMatrix pure(double phi) { return {1.0, phi}; }

    double r() const { return r_; }
    double phi() const { return phi_; }
    double a() const { return 0.5 + 0.5 * r_ * std::cos(2.0 * phi_); }
    double b() const { return 0.5 * r_ * std::sin(2.0 * phi_); }

    double lambda_max() const { return 0.5 * (1.0 + r_); }
    double lambda_min() const { return 0.5 * (1.0 - r_); }

    Mat2 matrix() const;

  private:
    double r_;
    double phi_;
};

/// Two-outcome Shannon entropy of the spectrum {(1+r)/2, (1-r)/2}, in nats.
/// Uses the 0*ln(0) = 0 convention, so r = 1 gives exactly 0.
double entropy_from_r(double r);
double von_neumann_entropy(const DensityMatrix& rho);

/// Conjugation by the rotation R(omega): (r, phi) -> (r, phi + omega).
DensityMatrix rotate_density(const DensityMatrix& rho, double omega);

/// tr(rho * A).
double trace_pairing(const DensityMatrix& rho, const SymObservable& a);

/// <phi| rho |phi> = (1 + r cos 2(phi - eta))/2 for rho with direction eta.
double state_probability(double phi, const DensityMatrix& rho);

}  // namespace planeq
