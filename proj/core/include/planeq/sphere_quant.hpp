#pragma once

#include <functional>

#include "planeq/complex2.hpp"
#include "planeq/mat2.hpp"
#include "planeq/quaternion.hpp"

namespace planeq {

/// Fourier data of a real function f(theta, phi) on the unit sphere:
///   mean = (1/4pi) Int f sin t dt dp,
///   cc   = (1/4pi) Int f cos t sin t dt dp,
///   cs   = (1/4pi) Int f e^{-i p} sin^2 t dt dp.
struct SphereCoeffs {
    double mean = 0.0;
    double cc = 0.0;
    complexd cs{0.0, 0.0};
};

/// Real-valued function on the sphere, optionally with exact coefficients.
class SphereFunction {
  public:
    explicit SphereFunction(std::function<double(double, double)> eval);
    static SphereFunction with_coeffs(std::function<double(double, double)> eval,
                                      SphereCoeffs coeffs);

    double operator()(double theta, double phi) const { return eval_(theta, phi); }
    bool has_exact_coeffs() const { return has_coeffs_; }
    const SphereCoeffs& exact_coeffs() const { return coeffs_; }

  private:
    std::function<double(double, double)> eval_;
    SphereCoeffs coeffs_{};
    bool has_coeffs_ = false;
};

/// Product quadrature: Gauss-Legendre in u = cos(theta) by a uniform grid in
/// phi. The defaults integrate every fixed-degree integrand here to machine
/// precision.
struct SphereGrid {
    int n_theta = 32;
    int n_phi = 64;

    void validate() const;
};

/// Transported density matrix on the sphere:
///   (1/2) [[1 + r cos t, r sin t e^{-i p}], [r sin t e^{i p}, 1 - r cos t]].
/// Hermitian, unit trace, eigenvalues (1 +/- r)/2; a rank-one coherent-state
/// projector at r = 1. Throws std::invalid_argument for r outside [0, 1].
CMat2 rho_s2(double r, double theta, double phi);

/// Density matrix with Bloch vector x: (I + x.sigma)/2, |x| <= 1.
CMat2 rho_bloch(const Vec3& bloch);

/// SU(2) transport of rho_bloch to the sphere point (theta, phi), in the
/// convention that reduces to rho_s2 when the Bloch vector points along +k.
CMat2 rho_s2_general(const Vec3& bloch, double theta, double phi);

/// Int rho_s2_general sin t dt dp / (2 pi). Equals the identity only when
/// the Bloch vector is parallel to +/-k; otherwise the off-diagonal defect
/// (x1 - i x2)/2 survives, which is why the residual API below restricts to
/// the polar family.
CMat2 resolution_matrix_s2_general(const Vec3& bloch, const SphereGrid& grid = {});

/// Max-entry deviation of Int rho_r sin t dt dp / (2 pi) from the identity.
double resolution_residual_s2(double r, const SphereGrid& grid = {});

SphereCoeffs sphere_coeffs(const SphereFunction& f, const SphereGrid& grid = {});

/// Integral quantization on the sphere:
///   A_f = [[<f> + r cc, r cs], [r conj(cs), <f> - r cc]].
/// Hermitian for real f; the three components of the unit direction map to
/// (r/3) sigma_i.
CMat2 quantize_s2(const SphereFunction& f, double r, const SphereGrid& grid = {});

/// Magnetic moment gamma*J*n in a constant field B, quantized at radius r.
struct MagneticConfig {
    double gamma = 0.0;  ///< gyromagnetic factor
    double j_magnitude = 0.0;
    Vec3 field{};
    double r = 1.0;
};

/// Closed form of the quantized interaction energy: -(r/3) gamma J B.sigma.
CMat2 magnetic_hamiltonian(const MagneticConfig& cfg);

/// Same operator through the quadrature path, quantizing
/// h(theta, phi) = -gamma J B.n(theta, phi).
CMat2 magnetic_hamiltonian_quantized(const MagneticConfig& cfg,
                                     const SphereGrid& grid = {});

/// Energy scale E = -(r/3) gamma J B for a field B along +j; requires the
/// field to point along the y axis.
double magnetic_energy(const MagneticConfig& cfg);

/// Real antisymmetric form E * tau2 of the B-along-j Hamiltonian, the shape
/// the plane dynamics consumes.
Mat2 magnetic_pseudo_hamiltonian(const MagneticConfig& cfg);

/// tr(rho_r(dir0) rho_r(dir1)) = (1 + r^2 n0.n1)/2; a probability density
/// against sin t dt dp / (2 pi).
double prob_dist_s2(double r, double theta0, double phi0, double theta1,
                    double phi1);

}  // namespace planeq
