#pragma once

#include <functional>
#include <vector>

#include "planeq/plane.hpp"

namespace planeq {

/// Mode-0 and doubled-angle Fourier data of a function f on the circle:
///   mean = (1/2pi) Int f dphi,
///   cc   = (1/pi)  Int f cos(2 phi) dphi,
///   cs   = (1/pi)  Int f sin(2 phi) dphi.
/// These three numbers are all the quantizer sees.
struct FourierCoeffs {
    double mean = 0.0;
    double cc = 0.0;
    double cs = 0.0;
};

/// A real function (or a Dirac spike) on [0, 2*pi). Exact Fourier data can be
/// attached when it is known analytically; the quantizer then bypasses
/// quadrature.
class CircleFunction {
  public:
    explicit CircleFunction(std::function<double(double)> eval);
    static CircleFunction with_coeffs(std::function<double(double)> eval,
                                      FourierCoeffs coeffs);
    static CircleFunction dirac(double at);
    static CircleFunction constant(double c);
    /// c0 + c_cos * cos(2 phi) + c_sin * sin(2 phi), with exact coefficients.
    static CircleFunction harmonic(double c0, double c_cos, double c_sin);
    /// The 2*pi-periodic angle function phi on [0, 2*pi); exact coefficients
    /// (pi, 0, -1).
    static CircleFunction angle_function();

    bool is_dirac() const { return dirac_; }
    double dirac_at() const { return at_; }
    bool has_exact_coeffs() const { return has_coeffs_; }
    const FourierCoeffs& exact_coeffs() const { return coeffs_; }

    /// Pointwise evaluation; invalid for Dirac spikes.
    double operator()(double phi) const;

  private:
    CircleFunction() = default;

    std::function<double(double)> eval_;
    FourierCoeffs coeffs_{};
    bool has_coeffs_ = false;
    bool dirac_ = false;
    double at_ = 0.0;
};

/// phi -> f(phi - theta); exact coefficients and Dirac locations transported.
CircleFunction rotated(const CircleFunction& f, double theta);

/// Fourier data by uniform-grid quadrature with grid_points nodes (Dirac
/// spikes are evaluated analytically). grid_points must be even and >= 8.
FourierCoeffs fourier_coeffs(const CircleFunction& f, int grid_points);

/// Quantizer family: density matrices rho_{r, phi0 + phi} transported around
/// the circle.
struct QuantizerConfig {
    double r = 1.0;
    double phi0 = 0.0;
    int grid_points = 1024;

    void validate() const;
};

/// Integral quantization A_f = Int f(phi) rho_{r, phi0+phi} dphi / pi.
SymObservable quantize(const CircleFunction& f, const QuantizerConfig& cfg);

/// Closed form of the quantized angle function:
///   pi*I + (r/2) sigma_{2 phi0 - pi/2},  eigenvalues pi +/- r/2.
SymObservable quantize_angle_closed_form(const QuantizerConfig& cfg);

/// Max-entry deviation of (1/pi) Int rho_{r, phi0+phi} dphi from the identity,
/// computed on the cfg grid.
double resolution_of_identity_residual(const QuantizerConfig& cfg);

/// Lower (covariant) symbol phi -> tr(rho_{r, phi0+phi} A).
CircleFunction lower_symbol(const SymObservable& a, const QuantizerConfig& cfg);
/// Pure-state (r = 1, phi0 = 0) lower symbol: alpha + delta cos2phi + beta sin2phi.
CircleFunction lower_symbol(const SymObservable& a);
/// Canonical upper (contravariant) symbol for the pure-state quantizer:
/// alpha + 2 delta cos2phi + 2 beta sin2phi; re-quantizing it returns A.
CircleFunction upper_symbol(const SymObservable& a);
/// Lower symbol of the quantized angle function: pi - (r^2/2) sin(2 phi).
CircleFunction angle_lower_symbol(double r);

struct BerezinLiebTriple {
    double lower;   ///< (1/pi) Int g(lower symbol)
    double middle;  ///< g(lambda+) + g(lambda-)
    double upper;   ///< (1/pi) Int g(upper symbol)
};

/// Evaluates the Berezin-Lieb sandwich for a convex g; lower <= middle <= upper.
BerezinLiebTriple berezin_lieb_check(const SymObservable& a,
                                     const std::function<double(double)>& g,
                                     int grid_points = 1024);

/// Max-entry deviation between R(theta) A_f R(-theta) and the quantization of
/// the rotated function.
double covariance_residual(const CircleFunction& f, double theta,
                           const QuantizerConfig& cfg);

/// tr(rho_{r,eta} rho_{r,phi}) = (1 + r^2 cos 2(phi - eta))/2, the probability
/// density of the transported family against dphi/pi.
double probability_kernel(double r, double eta, double phi);

struct AngleInterval {
    double lo;
    double hi;  ///< half-open [lo, hi), 0 <= lo < hi <= 2*pi
};

/// Finite union of pairwise-disjoint half-open intervals in [0, 2*pi).
class BorelUnion {
  public:
    BorelUnion() = default;  ///< empty set
    explicit BorelUnion(std::vector<AngleInterval> intervals);
    static BorelUnion full_circle();

    const std::vector<AngleInterval>& intervals() const { return intervals_; }
    double total_length() const;
    bool empty() const { return intervals_.empty(); }

  private:
    std::vector<AngleInterval> intervals_;
};

/// POVM element a(Delta) = (1/pi) Int_Delta |phi><phi| dphi, evaluated by the
/// closed-form antiderivative so that additivity is bit-stable.
SymObservable povm_measure(const BorelUnion& delta);

/// <eta| a(Delta) |eta> = (1/pi) Int_Delta cos^2(phi - eta) dphi, in [0, 1].
double geometric_probability(double eta, const BorelUnion& delta);

}  // namespace planeq
