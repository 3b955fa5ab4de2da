#pragma once

#include <functional>
#include <vector>

namespace planeq {

struct QuadNode {
    double x;
    double w;
};

/// Gauss-Legendre nodes and weights on [-1, 1]. Exact for polynomials of
/// degree 2n-1.
std::vector<QuadNode> gauss_legendre(int n);

/// Uniform midpoint rule for the integral of f over [0, 2*pi). Spectrally
/// accurate for smooth periodic integrands; the offset grid keeps a jump at
/// phi = 0 off the nodes.
double integrate_circle(const std::function<double(double)>& f, int n);

/// Composite Simpson rule on [a, b] with n subintervals (n is rounded up to
/// the next even count).
double simpson(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace planeq
