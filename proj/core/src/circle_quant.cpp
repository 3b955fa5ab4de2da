#include "planeq/circle_quant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "planeq/quadrature.hpp"

namespace planeq {

CircleFunction::CircleFunction(std::function<double(double)> eval) {
    eval_ = std::move(eval);
}

CircleFunction CircleFunction::with_coeffs(std::function<double(double)> eval,
                                           FourierCoeffs coeffs) {
    CircleFunction f;
    f.eval_ = std::move(eval);
    f.coeffs_ = coeffs;
    f.has_coeffs_ = true;
    return f;
}

CircleFunction CircleFunction::dirac(double at) {
    CircleFunction f;
    f.dirac_ = true;
    f.at_ = wrap_circle(at);
    // Against the measure dphi: mean 1/(2pi), doubled-angle modes cos/sin(2 at)/pi.
    f.coeffs_ = {1.0 / two_pi, std::cos(2.0 * f.at_) / pi, std::sin(2.0 * f.at_) / pi};
    f.has_coeffs_ = true;
    return f;
}

CircleFunction CircleFunction::constant(double c) {
    return with_coeffs([c](double) { return c; }, {c, 0.0, 0.0});
}

CircleFunction CircleFunction::harmonic(double c0, double c_cos, double c_sin) {
    return with_coeffs(
        [c0, c_cos, c_sin](double phi) {
            return c0 + c_cos * std::cos(2.0 * phi) + c_sin * std::sin(2.0 * phi);
        },
        {c0, c_cos, c_sin});
}

CircleFunction CircleFunction::angle_function() {
    return with_coeffs([](double phi) { return wrap_circle(phi); }, {pi, 0.0, -1.0});
}

double CircleFunction::operator()(double phi) const {
    if (dirac_) {
        throw std::invalid_argument("CircleFunction: Dirac spike has no pointwise value");
    }
    return eval_(phi);
}

CircleFunction rotated(const CircleFunction& f, double theta) {
    if (f.is_dirac()) return CircleFunction::dirac(f.dirac_at() + theta);
    auto shifted = [f, theta](double phi) { return f(phi - theta); };
    if (f.has_exact_coeffs()) {
        const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta);
        const FourierCoeffs& fc = f.exact_coeffs();
        return CircleFunction::with_coeffs(
            shifted, {fc.mean, fc.cc * c - fc.cs * s, fc.cs * c + fc.cc * s});
    }
    return CircleFunction(shifted);
}

FourierCoeffs fourier_coeffs(const CircleFunction& f, int grid_points) {
    if (grid_points < 8 || grid_points % 2 != 0) {
        throw std::invalid_argument("fourier_coeffs: grid must be even and >= 8");
    }
    if (f.is_dirac()) return f.exact_coeffs();
    const int n = grid_points;
    const double h = two_pi / n;
    double s0 = 0.0, sc = 0.0, ss = 0.0;
    for (int k = 0; k < n; ++k) {
        const double phi = (k + 0.5) * h;
        const double v = f(phi);
        s0 += v;
        sc += v * std::cos(2.0 * phi);
        ss += v * std::sin(2.0 * phi);
    }
    return {s0 / n, 2.0 * sc / n, 2.0 * ss / n};
}

void QuantizerConfig::validate() const {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("QuantizerConfig: r must lie in [0, 1]");
    }
    if (grid_points < 8 || grid_points % 2 != 0) {
        throw std::invalid_argument("QuantizerConfig: grid must be even and >= 8");
    }
}

SymObservable quantize(const CircleFunction& f, const QuantizerConfig& cfg) {
    cfg.validate();
    const FourierCoeffs c =
        f.has_exact_coeffs() ? f.exact_coeffs() : fourier_coeffs(f, cfg.grid_points);
    // A_f entries follow from rho_{r, phi0+phi} carrying the modes cos/sin 2(phi + phi0).
    const double c0 = std::cos(2.0 * cfg.phi0), s0 = std::sin(2.0 * cfg.phi0);
    return {c.mean, 0.5 * cfg.r * (c.cc * c0 - c.cs * s0),
            0.5 * cfg.r * (c.cs * c0 + c.cc * s0)};
}

SymObservable quantize_angle_closed_form(const QuantizerConfig& cfg) {
    cfg.validate();
    return SymObservable{pi, 0.0, 0.0} + 0.5 * cfg.r * sigma_phi(2.0 * cfg.phi0 - half_pi);
}

double resolution_of_identity_residual(const QuantizerConfig& cfg) {
    cfg.validate();
    const int n = cfg.grid_points;
    const double h = two_pi / n;
    Mat2 acc = Mat2::zero();
    for (int k = 0; k < n; ++k) {
        acc = acc + DensityMatrix(cfg.r, cfg.phi0 + (k + 0.5) * h).matrix();
    }
    // (1/pi) * h * acc; the 2/n scaling keeps the r = 0 case exact.
    return (acc * (2.0 / n)).max_abs_diff(Mat2::identity());
}

CircleFunction lower_symbol(const SymObservable& a, const QuantizerConfig& cfg) {
    cfg.validate();
    const double c0 = std::cos(2.0 * cfg.phi0), s0 = std::sin(2.0 * cfg.phi0);
    return CircleFunction::harmonic(a.alpha, cfg.r * (a.delta * c0 + a.beta * s0),
                                    cfg.r * (a.beta * c0 - a.delta * s0));
}

CircleFunction lower_symbol(const SymObservable& a) {
    return CircleFunction::harmonic(a.alpha, a.delta, a.beta);
}

CircleFunction upper_symbol(const SymObservable& a) {
    return CircleFunction::harmonic(a.alpha, 2.0 * a.delta, 2.0 * a.beta);
}

CircleFunction angle_lower_symbol(double r) {
    return CircleFunction::harmonic(pi, 0.0, -0.5 * r * r);
}

BerezinLiebTriple berezin_lieb_check(const SymObservable& a,
                                     const std::function<double(double)>& g,
                                     int grid_points) {
    const CircleFunction lo = lower_symbol(a);
    const CircleFunction up = upper_symbol(a);
    const double lower =
        integrate_circle([&](double phi) { return g(lo(phi)); }, grid_points) / pi;
    const double upper =
        integrate_circle([&](double phi) { return g(up(phi)); }, grid_points) / pi;
    return {lower, g(a.eigen_max()) + g(a.eigen_min()), upper};
}

double covariance_residual(const CircleFunction& f, double theta,
                           const QuantizerConfig& cfg) {
    const Mat2 rot = Mat2::rotation(theta);
    const Mat2 lhs = rot * quantize(f, cfg).matrix() * rot.transpose();
    const Mat2 rhs = quantize(rotated(f, theta), cfg).matrix();
    return lhs.max_abs_diff(rhs);
}

double probability_kernel(double r, double eta, double phi) {
    return 0.5 * (1.0 + r * r * std::cos(2.0 * (phi - eta)));
}

BorelUnion::BorelUnion(std::vector<AngleInterval> intervals)
    : intervals_(std::move(intervals)) {
    for (const auto& iv : intervals_) {
        if (!(iv.lo >= 0.0 && iv.lo < iv.hi && iv.hi <= two_pi)) {
            throw std::invalid_argument(
                "BorelUnion: intervals must be nonempty and lie in [0, 2*pi)");
        }
    }
    std::sort(intervals_.begin(), intervals_.end(),
              [](const AngleInterval& a, const AngleInterval& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < intervals_.size(); ++i) {
        if (intervals_[i].lo < intervals_[i - 1].hi) {
            throw std::invalid_argument("BorelUnion: intervals overlap");
        }
    }
}

BorelUnion BorelUnion::full_circle() {
    return BorelUnion{{AngleInterval{0.0, two_pi}}};
}

double BorelUnion::total_length() const {
    double len = 0.0;
    for (const auto& iv : intervals_) len += iv.hi - iv.lo;
    return len;
}

SymObservable povm_measure(const BorelUnion& delta) {
    // Antiderivatives of |phi><phi| / pi in the {I, sigma3, sigma1} basis.
    SymObservable acc{0.0, 0.0, 0.0};
    for (const auto& iv : delta.intervals()) {
        acc.alpha += (iv.hi - iv.lo) / two_pi;
        acc.delta += (std::sin(2.0 * iv.hi) - std::sin(2.0 * iv.lo)) / (2.0 * two_pi);
        acc.beta += (std::cos(2.0 * iv.lo) - std::cos(2.0 * iv.hi)) / (2.0 * two_pi);
    }
    return acc;
}

double geometric_probability(double eta, const BorelUnion& delta) {
    double p = 0.0;
    for (const auto& iv : delta.intervals()) {
        p += 0.5 * (iv.hi - iv.lo) +
             0.25 * (std::sin(2.0 * (iv.hi - eta)) - std::sin(2.0 * (iv.lo - eta)));
    }
    return std::clamp(p / pi, 0.0, 1.0);
}

}  // namespace planeq
