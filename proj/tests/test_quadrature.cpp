#include <doctest.h>

#include <cmath>

#include "oracle_utils.hpp"
#include "planeq/angle.hpp"
#include "planeq/quadrature.hpp"

using namespace planeq;

TEST_CASE("gauss-legendre nodes and weights") {
    SUBCASE("n = 2") {
        const auto nodes = gauss_legendre(2);
        CHECK_NEAR(nodes[0].x, -1.0 / std::sqrt(3.0), 1e-15);
        CHECK_NEAR(nodes[1].x, 1.0 / std::sqrt(3.0), 1e-15);
        CHECK_NEAR(nodes[0].w, 1.0, 1e-15);
        CHECK_NEAR(nodes[1].w, 1.0, 1e-15);
    }
    SUBCASE("n = 3") {
        const auto nodes = gauss_legendre(3);
        CHECK_NEAR(nodes[0].x, -std::sqrt(0.6), 1e-15);
        CHECK_NEAR(nodes[1].x, 0.0, 1e-15);
        CHECK_NEAR(nodes[2].x, std::sqrt(0.6), 1e-15);
        CHECK_NEAR(nodes[0].w, 5.0 / 9.0, 1e-14);
        CHECK_NEAR(nodes[1].w, 8.0 / 9.0, 1e-15);
    }
    SUBCASE("weights sum to 2") {
        for (int n : {5, 16, 32, 33, 64}) {
            double sum = 0.0;
            for (const auto& node : gauss_legendre(n)) sum += node.w;
            CHECK_NEAR(sum, 2.0, 1e-14);
        }
    }
    SUBCASE("polynomial exactness") {
        // degree 7 with n = 4: Int x^6 = 2/7, odd powers vanish
        const auto nodes = gauss_legendre(4);
        double even = 0.0, odd = 0.0;
        for (const auto& node : nodes) {
            even += node.w * std::pow(node.x, 6);
            odd += node.w * std::pow(node.x, 7);
        }
        CHECK_NEAR(even, 2.0 / 7.0, 1e-15);
        CHECK_NEAR(odd, 0.0, 1e-16);
    }
    SUBCASE("smooth integrand") {
        const auto nodes = gauss_legendre(20);
        double sum = 0.0;
        for (const auto& node : nodes) sum += node.w * std::cos(node.x);
        CHECK_NEAR(sum, 2.0 * std::sin(1.0), 1e-14);
    }
}

TEST_CASE("periodic midpoint rule") {
    CHECK_NEAR(integrate_circle([](double p) { return std::sin(p) * std::sin(p); }, 64),
               pi, 1e-13);
    // modified Bessel identity: Int exp(sin p) dp = 2 pi I0(1)
    CHECK_NEAR(integrate_circle([](double p) { return std::exp(std::sin(p)); }, 64),
               two_pi * std::cyl_bessel_i(0.0, 1.0), 1e-12);
    // pure modes vanish
    for (int m : {1, 2, 3, 7}) {
        CHECK_NEAR(integrate_circle([m](double p) { return std::cos(m * p); }, 64),
                   0.0, 1e-13);
    }
}

TEST_CASE("simpson rule") {
    CHECK_NEAR(simpson([](double x) { return x * x * x; }, 0.0, 1.0, 16), 0.25, 1e-15);
    CHECK_NEAR(simpson([](double x) { return std::sin(x); }, 0.0, pi, 512), 2.0, 1e-10);
    CHECK(simpson([](double) { return 1.0; }, 1.0, 1.0, 8) == 0.0);
}
