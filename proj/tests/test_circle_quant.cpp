#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracle_utils.hpp"
#include "planeq/circle_quant.hpp"
#include "planeq/quadrature.hpp"

using namespace planeq;

namespace {

// quantization of a plain evaluator, forcing the quadrature path
SymObservable quantize_raw(const std::function<double(double)>& f,
                           const QuantizerConfig& cfg) {
    return quantize(CircleFunction(f), cfg);
}

}  // namespace

TEST_CASE("fourier coefficients") {
    SUBCASE("constant and doubled-angle modes") {
        const auto c1 = fourier_coeffs(CircleFunction([](double) { return 1.0; }), 64);
        CHECK(c1.mean == 1.0);
        CHECK_NEAR(c1.cc, 0.0, 1e-14);
        CHECK_NEAR(c1.cs, 0.0, 1e-14);

        const auto c2 =
            fourier_coeffs(CircleFunction([](double p) { return std::cos(2 * p); }), 64);
        CHECK_NEAR(c2.mean, 0.0, 1e-14);
        CHECK_NEAR(c2.cc, 1.0, 1e-13);
        CHECK_NEAR(c2.cs, 0.0, 1e-13);
    }
    SUBCASE("angle function") {
        CHECK(CircleFunction::angle_function().exact_coeffs().mean == pi);
        CHECK(CircleFunction::angle_function().exact_coeffs().cc == 0.0);
        CHECK(CircleFunction::angle_function().exact_coeffs().cs == -1.0);
        // the raw sawtooth by quadrature: mean and cc are exact on the offset
        // grid, cs converges at O(1/N^2)
        const auto c = fourier_coeffs(CircleFunction([](double p) { return p; }), 4096);
        CHECK_NEAR(c.mean, pi, 1e-12);
        CHECK_NEAR(c.cc, 0.0, 1e-12);
        CHECK_NEAR(c.cs, -1.0, 1e-6);
    }
    SUBCASE("dirac spike is analytic") {
        const auto c = fourier_coeffs(CircleFunction::dirac(0.8), 64);
        CHECK(c.mean == 1.0 / two_pi);
        CHECK(c.cc == std::cos(1.6) / pi);
        CHECK(c.cs == std::sin(1.6) / pi);
    }
    SUBCASE("grid validation") {
        CHECK_THROWS_AS(fourier_coeffs(CircleFunction([](double) { return 1.0; }), 7),
                        std::invalid_argument);
        CHECK_THROWS_AS(fourier_coeffs(CircleFunction([](double) { return 1.0; }), 9),
                        std::invalid_argument);
    }
    SUBCASE("exact coefficients agree with quadrature") {
        // smooth members: tight agreement at N = 2048
        const CircleFunction h = CircleFunction::harmonic(0.3, -1.2, 0.7);
        const auto hq = fourier_coeffs(CircleFunction([h](double p) { return h(p); }), 2048);
        CHECK_NEAR(hq.mean, 0.3, 1e-9);
        CHECK_NEAR(hq.cc, -1.2, 1e-9);
        CHECK_NEAR(hq.cs, 0.7, 1e-9);
        // the discontinuous angle function only at the relaxed tolerance
        const auto aq =
            fourier_coeffs(CircleFunction([](double p) { return wrap_circle(p); }), 2048);
        CHECK_NEAR(aq.mean, pi, 1e-3);
        CHECK_NEAR(aq.cc, 0.0, 1e-3);
        CHECK_NEAR(aq.cs, -1.0, 1e-3);
    }
}

TEST_CASE("quantize basics") {
    SUBCASE("unity maps to the identity") {
        for (double r : {0.0, 0.4, 1.0}) {
            const SymObservable a =
                quantize(CircleFunction::constant(1.0), {r, 0.7, 1024});
            CHECK(a.matrix().max_abs_diff(Mat2::identity()) == 0.0);
            const SymObservable raw = quantize_raw([](double) { return 1.0; }, {r, 0.7, 1024});
            CHECK(raw.matrix().max_abs_diff(Mat2::identity()) <= 1e-13);
        }
    }
    SUBCASE("angle function at r = 1, phi0 = 0") {
        const SymObservable a = quantize(CircleFunction::angle_function(), {1.0, 0.0, 1024});
        CHECK(a.alpha == pi);
        CHECK(a.delta == 0.0);
        CHECK(a.beta == -0.5);
        const auto d = spectral_decompose(a);
        CHECK_NEAR(d.lambda1, pi + 0.5, 1e-15);
        CHECK_NEAR(d.lambda2, pi - 0.5, 1e-15);
        CHECK_NEAR(d.phi1, 3 * pi / 4, 1e-15);
    }
    SUBCASE("classical counterpart of sigma_theta") {
        // the doubled-angle harmonic (2/r) cos(2 phi - theta + 2 phi0)
        auto gen = oracle::rng(31);
        for (int i = 0; i < 10; ++i) {
            const double r = oracle::uniform(gen, 0.2, 1.0);
            const double phi0 = oracle::uniform(gen, 0.0, two_pi);
            const double theta = oracle::uniform(gen, 0.0, two_pi);
            const SymObservable a = quantize_raw(
                [r, phi0, theta](double p) {
                    return 2.0 / r * std::cos(2.0 * p - theta + 2.0 * phi0);
                },
                {r, phi0, 1024});
            CHECK(a.matrix().max_abs_diff(sigma_phi(theta).matrix()) <= 1e-12);
        }
    }
    SUBCASE("linearity over the quantizable span") {
        auto gen = oracle::rng(32);
        const QuantizerConfig cfg{0.8, 0.45, 1 << 18};
        const std::vector<std::function<double(double)>> basis = {
            [](double) { return 1.0; },
            [](double p) { return std::cos(2 * p); },
            [](double p) { return std::sin(2 * p); },
            [](double p) { return wrap_circle(p); },
        };
        for (int i = 0; i < 6; ++i) {
            const int fi = i % 4, gi = (i + 1) % 4;
            const double ca = oracle::uniform(gen, -1.0, 1.0);
            const double cb = oracle::uniform(gen, -1.0, 1.0);
            const SymObservable left = quantize_raw(
                [&, ca, cb](double p) { return ca * basis[fi](p) + cb * basis[gi](p); },
                cfg);
            const SymObservable right =
                ca * quantize_raw(basis[fi], cfg) + cb * quantize_raw(basis[gi], cfg);
            CHECK(left.matrix().max_abs_diff(right.matrix()) <= 1e-10);
        }
    }
    SUBCASE("matches the brute-force matrix integral") {
        // Riemann sum of f(phi) rho_{r, phi0+phi} dphi / pi, entry by entry
        auto gen = oracle::rng(29);
        for (int i = 0; i < 10; ++i) {
            const double r = oracle::uniform(gen, 0.0, 1.0);
            const double phi0 = oracle::uniform(gen, 0.0, two_pi);
            const double c1 = oracle::uniform(gen, -1.0, 1.0);
            const double c2 = oracle::uniform(gen, -1.0, 1.0);
            const auto f = [c1, c2](double p) {
                return c1 * std::cos(2 * p) + c2 * std::exp(std::sin(p));
            };
            const int n = 2048;
            Mat2 brute = Mat2::zero();
            for (int k = 0; k < n; ++k) {
                const double p = two_pi * (k + 0.5) / n;
                brute = brute + DensityMatrix(r, phi0 + p).matrix() * f(p);
            }
            brute = brute * (2.0 / n);
            const SymObservable a = quantize_raw(f, {r, phi0, 2048});
            CHECK(a.matrix().max_abs_diff(brute) <= 1e-10);
        }
    }
    SUBCASE("eigenvalues from the fourier data") {
        auto gen = oracle::rng(30);
        for (int i = 0; i < 20; ++i) {
            const double mean = oracle::uniform(gen, -1.0, 1.0);
            const double cc = oracle::uniform(gen, -1.0, 1.0);
            const double cs = oracle::uniform(gen, -1.0, 1.0);
            const double r = oracle::uniform(gen, 0.0, 1.0);
            const SymObservable a =
                quantize(CircleFunction::harmonic(mean, cc, cs), {r, 0.9, 1024});
            CHECK_NEAR(a.eigen_max(), mean + 0.5 * r * std::hypot(cc, cs), 1e-14);
            CHECK_NEAR(a.eigen_min(), mean - 0.5 * r * std::hypot(cc, cs), 1e-14);
        }
    }
    SUBCASE("dirac quantization gives the scaled projector") {
        auto gen = oracle::rng(33);
        for (int i = 0; i < 20; ++i) {
            const double eta = oracle::uniform(gen, 0.0, two_pi);
            const SymObservable a = quantize(CircleFunction::dirac(eta), {1.0, 0.0, 1024});
            CHECK(a.matrix().max_abs_diff(projector(eta) * (1.0 / pi)) <= 1e-12);
        }
    }
}

TEST_CASE("quantized angle closed form") {
    SUBCASE("golden values") {
        const SymObservable a = quantize_angle_closed_form({1.0, 0.0, 1024});
        CHECK(a.matrix().max_abs_diff(Mat2{pi, -0.5, -0.5, pi}) == 0.0);
        const SymObservable b = quantize_angle_closed_form({0.0, 1.3, 1024});
        CHECK(b.matrix().max_abs_diff(Mat2::identity() * pi) == 0.0);
    }
    SUBCASE("eigenvectors at phi0 -/+ pi/4") {
        auto gen = oracle::rng(34);
        for (int i = 0; i < 20; ++i) {
            const double r = oracle::uniform(gen, 0.1, 1.0);
            const double phi0 = oracle::uniform(gen, 0.0, two_pi);
            const auto d = spectral_decompose(quantize_angle_closed_form({r, phi0, 1024}));
            CHECK_NEAR(d.lambda1, pi + 0.5 * r, 1e-14);
            CHECK_NEAR(d.lambda2, pi - 0.5 * r, 1e-14);
            CHECK_NEAR(d.phi1, wrap_ray(phi0 - pi / 4), 1e-12);
        }
    }
    SUBCASE("agrees with the quantizer") {
        auto gen = oracle::rng(35);
        for (int i = 0; i < 20; ++i) {
            const double r = oracle::uniform(gen, 0.0, 1.0);
            const double phi0 = oracle::uniform(gen, 0.0, two_pi);
            const SymObservable via_coeffs =
                quantize(CircleFunction::angle_function(), {r, phi0, 1024});
            const SymObservable closed = quantize_angle_closed_form({r, phi0, 1024});
            CHECK(via_coeffs.matrix().max_abs_diff(closed.matrix()) <= 1e-9);
        }
        // the raw quadrature path needs a fine grid near the jump
        const SymObservable raw =
            quantize_raw([](double p) { return wrap_circle(p); }, {0.9, 1.1, 1 << 18});
        CHECK(raw.matrix().max_abs_diff(
                  quantize_angle_closed_form({0.9, 1.1, 1024}).matrix()) <= 1e-9);
    }
}

TEST_CASE("resolution of the identity") {
    CHECK(resolution_of_identity_residual({0.0, 0.0, 1024}) == 0.0);
    CHECK(resolution_of_identity_residual({1.0, 0.0, 1024}) < 1e-10);
    CHECK(resolution_of_identity_residual({0.7, 1.1, 1024}) < 1e-10);
}

TEST_CASE("symbols") {
    SUBCASE("pure-state lower symbol of the quantized angle") {
        const SymObservable a = quantize_angle_closed_form({1.0, 0.0, 1024});
        const CircleFunction sym = lower_symbol(a);
        for (double p = 0.0; p < two_pi; p += 0.1) {
            CHECK_NEAR(sym(p), pi - 0.5 * std::sin(2 * p), 1e-14);
        }
    }
    SUBCASE("identity and pauli symbols") {
        const CircleFunction low = lower_symbol(SymObservable::identity());
        const CircleFunction up = upper_symbol(SymObservable::identity());
        CHECK(low(0.3) == 1.0);
        CHECK(up(1.2) == 1.0);
        const SymObservable s3{0.0, 1.0, 0.0};
        CHECK_NEAR(lower_symbol(s3)(0.4), std::cos(0.8), 1e-15);
        CHECK_NEAR(upper_symbol(s3)(0.4), 2.0 * std::cos(0.8), 1e-15);
    }
    SUBCASE("upper symbol identity 2*lower - tr/2") {
        auto gen = oracle::rng(36);
        for (int i = 0; i < 50; ++i) {
            const SymObservable a{oracle::uniform(gen, -2.0, 2.0),
                                  oracle::uniform(gen, -2.0, 2.0),
                                  oracle::uniform(gen, -2.0, 2.0)};
            const double p = oracle::uniform(gen, 0.0, two_pi);
            CHECK_NEAR(upper_symbol(a)(p),
                       2.0 * lower_symbol(a)(p) - 0.5 * a.matrix().trace(), 1e-13);
        }
    }
    SUBCASE("upper symbol round trip") {
        auto gen = oracle::rng(37);
        for (int i = 0; i < 100; ++i) {
            const SymObservable a{oracle::uniform(gen, -2.0, 2.0),
                                  oracle::uniform(gen, -2.0, 2.0),
                                  oracle::uniform(gen, -2.0, 2.0)};
            const CircleFunction up = upper_symbol(a);
            // quadrature path, not the attached coefficients
            const SymObservable back =
                quantize_raw([up](double p) { return up(p); }, {1.0, 0.0, 1024});
            CHECK(back.matrix().max_abs_diff(a.matrix()) <= 1e-10);
        }
    }
    SUBCASE("general-r lower symbol of the angle operator") {
        CHECK(angle_lower_symbol(0.0)(0.9) == pi);
        CHECK_NEAR(angle_lower_symbol(1.0)(pi / 4), pi - 0.5, 1e-15);
        CHECK_NEAR(angle_lower_symbol(0.5)(pi / 4), pi - 0.125, 1e-15);

        // trace-pairing oracle, independent of phi0
        auto gen = oracle::rng(38);
        for (int i = 0; i < 50; ++i) {
            const double r = oracle::uniform(gen, 0.0, 1.0);
            const double phi0 = oracle::uniform(gen, 0.0, two_pi);
            const double p = oracle::uniform(gen, 0.0, two_pi);
            const SymObservable a = quantize_angle_closed_form({r, phi0, 1024});
            const double paired = trace_pairing(DensityMatrix(r, phi0 + p), a);
            CHECK_NEAR(paired, angle_lower_symbol(r)(p), 1e-13);
            CHECK_NEAR(lower_symbol(a, {r, phi0, 1024})(p), paired, 1e-13);
        }
    }
}

TEST_CASE("berezin-lieb sandwich") {
    SUBCASE("linear g collapses the chain") {
        auto gen = oracle::rng(39);
        for (int i = 0; i < 20; ++i) {
            const SymObservable a{oracle::uniform(gen, -2.0, 2.0),
                                  oracle::uniform(gen, -2.0, 2.0),
                                  oracle::uniform(gen, -2.0, 2.0)};
            const auto t = berezin_lieb_check(a, [](double x) { return x; }, 1024);
            CHECK_NEAR(t.lower, a.matrix().trace(), 1e-12);
            CHECK_NEAR(t.middle, a.matrix().trace(), 1e-12);
            CHECK_NEAR(t.upper, a.matrix().trace(), 1e-12);
        }
    }
    SUBCASE("squared g on sigma3") {
        const auto t = berezin_lieb_check(SymObservable{0.0, 1.0, 0.0},
                                          [](double x) { return x * x; }, 2048);
        CHECK_NEAR(t.lower, 1.0, 1e-12);
        CHECK_NEAR(t.middle, 2.0, 1e-15);
        CHECK_NEAR(t.upper, 4.0, 1e-12);
    }
    SUBCASE("exponential g on the quantized angle") {
        const SymObservable a = quantize_angle_closed_form({1.0, 0.0, 1024});
        const auto t =
            berezin_lieb_check(a, [](double x) { return std::exp(x); }, 2048);
        CHECK_NEAR(t.middle, std::exp(pi + 0.5) + std::exp(pi - 0.5), 1e-12);
        CHECK(t.lower < t.middle);
        CHECK(t.middle < t.upper);
    }
    SUBCASE("random observables") {
        auto gen = oracle::rng(40);
        for (int i = 0; i < 100; ++i) {
            const SymObservable a{oracle::uniform(gen, -1.0, 1.0),
                                  oracle::uniform(gen, -1.0, 1.0),
                                  oracle::uniform(gen, -1.0, 1.0)};
            for (const auto& g : {std::function<double(double)>([](double x) { return x * x; }),
                                  std::function<double(double)>([](double x) { return std::exp(x); })}) {
                const auto t = berezin_lieb_check(a, g, 512);
                CHECK(t.middle - t.lower >= -1e-10);
                CHECK(t.upper - t.middle >= -1e-10);
            }
        }
    }
}

TEST_CASE("rotational covariance") {
    const QuantizerConfig cfg{0.8, 0.3, 1024};
    CHECK(covariance_residual(CircleFunction::angle_function(), 0.0, cfg) == 0.0);
    CHECK(covariance_residual(CircleFunction::angle_function(), half_pi, cfg) < 1e-9);
    CHECK(covariance_residual(CircleFunction::harmonic(0.0, 1.0, 0.0), pi / 3, cfg) <
          1e-9);
    // quadrature path for a smooth function
    CHECK(covariance_residual(CircleFunction([](double p) { return std::cos(2 * p); }),
                              pi / 3, cfg) < 1e-9);
    // rotating a spike moves it
    const CircleFunction moved = rotated(CircleFunction::dirac(0.4), 1.0);
    CHECK(moved.is_dirac());
    CHECK_NEAR(moved.dirac_at(), 1.4, 1e-15);
}

TEST_CASE("probability kernel of the transported family") {
    auto gen = oracle::rng(41);
    for (int i = 0; i < 50; ++i) {
        const double r = oracle::uniform(gen, 0.0, 1.0);
        const double eta = oracle::uniform(gen, 0.0, two_pi);
        const double p = oracle::uniform(gen, 0.0, two_pi);
        const double kernel = probability_kernel(r, eta, p);
        CHECK(kernel >= 0.0);
        // trace oracle
        const Mat2 prod =
            DensityMatrix(r, eta).matrix() * DensityMatrix(r, p).matrix();
        CHECK_NEAR(kernel, prod.trace(), 1e-12);
    }
    for (int i = 0; i < 10; ++i) {
        const double r = oracle::uniform(gen, 0.0, 1.0);
        const double eta = oracle::uniform(gen, 0.0, two_pi);
        const double total = integrate_circle(
            [r, eta](double p) { return probability_kernel(r, eta, p) / pi; }, 1024);
        CHECK_NEAR(total, 1.0, 1e-10);
    }
}

TEST_CASE("povm over borel unions") {
    SUBCASE("whole circle and empty set") {
        CHECK(povm_measure(BorelUnion::full_circle())
                  .matrix()
                  .max_abs_diff(Mat2::identity()) <= 1e-15);
        CHECK(povm_measure(BorelUnion{}).matrix().max_abs() == 0.0);
        CHECK(BorelUnion{}.empty());
    }
    SUBCASE("interval validation") {
        CHECK_THROWS_AS(BorelUnion({{0.0, 1.0}, {0.5, 1.5}}), std::invalid_argument);
        CHECK_THROWS_AS(BorelUnion({{1.0, 1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(BorelUnion({{-0.5, 1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(BorelUnion({{1.0, two_pi + 0.1}}), std::invalid_argument);
        CHECK(BorelUnion({{0.0, 1.0}, {1.0, 2.0}}).total_length() == 2.0);
    }
    SUBCASE("additivity over partitions") {
        auto gen = oracle::rng(42);
        for (int i = 0; i < 50; ++i) {
            double c1 = oracle::uniform(gen, 0.1, two_pi - 0.2);
            double c2 = oracle::uniform(gen, c1 + 0.05, two_pi - 0.05);
            const Mat2 sum = (povm_measure(BorelUnion({{0.0, c1}})) +
                              povm_measure(BorelUnion({{c1, c2}})) +
                              povm_measure(BorelUnion({{c2, two_pi}})))
                                 .matrix();
            CHECK(sum.max_abs_diff(Mat2::identity()) <= 1e-12);
        }
    }
    SUBCASE("geometric probability of a quarter arc") {
        const BorelUnion quarter({{0.0, half_pi}});
        const double p = geometric_probability(0.0, quarter);
        // brute-force quadrature of the defining integral
        const double by_quadrature = oracle::simpson_integral(
            [](double phi) { return std::cos(phi) * std::cos(phi) / pi; }, 0.0,
            half_pi, 2048);
        CHECK_NEAR(p, by_quadrature, 1e-12);
        CHECK_NEAR(p, 0.25, 1e-15);

        // the arc centered on eta carries the extra 1/(2 pi)
        const BorelUnion centered({{0.0, pi / 4}, {two_pi - pi / 4, two_pi}});
        CHECK_NEAR(geometric_probability(0.0, centered), 0.25 + 1.0 / two_pi, 1e-14);
    }
    SUBCASE("probabilities stay in [0, 1]") {
        auto gen = oracle::rng(43);
        for (int i = 0; i < 100; ++i) {
            const double lo = oracle::uniform(gen, 0.0, two_pi - 0.1);
            const double hi = oracle::uniform(gen, lo + 0.05, two_pi);
            const double eta = oracle::uniform(gen, 0.0, two_pi);
            const double p = geometric_probability(eta, BorelUnion({{lo, hi}}));
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            // matrix route agrees with the closed form
            const Vec2 u = pure_state(eta);
            CHECK_NEAR(u.dot(povm_measure(BorelUnion({{lo, hi}})).matrix() * u), p,
                       1e-13);
        }
    }
}
