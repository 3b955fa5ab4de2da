#pragma once

#include <array>
#include <vector>

#include "planeq/complex2.hpp"
#include "planeq/plane.hpp"
#include "planeq/quaternion.hpp"

namespace planeq {

// Storage order of the two-plane tensor product, fixed everywhere:
//   e1 = |0>|0>,  e2 = |pi/2>|pi/2>,  e3 = |0>|pi/2>,  e4 = |pi/2>|0>.

struct Vec4 {
    std::array<double, 4> v{};

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }

    Vec4 operator+(const Vec4& o) const;
    Vec4 operator-(const Vec4& o) const;
    Vec4 operator*(double s) const;
    Vec4 operator-() const { return *this * -1.0; }

    double dot(const Vec4& o) const;
    double norm() const;
    double max_abs_diff(const Vec4& o) const;
};

inline Vec4 operator*(double s, const Vec4& v) { return v * s; }

/// Real 4x4 matrix, row-major, acting on the fixed tensor order above.
struct Mat4 {
    std::array<double, 16> m{};

    static Mat4 identity();
    static Mat4 zero() { return {}; }

    double& operator()(int i, int j) { return m[4 * i + j]; }
    double operator()(int i, int j) const { return m[4 * i + j]; }

    Mat4 operator+(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 operator*(double s) const;
    Mat4 operator*(const Mat4& o) const;
    Vec4 operator*(const Vec4& x) const;

    Mat4 transpose() const;
    double trace() const { return m[0] + m[5] + m[10] + m[15]; }
    double max_abs() const;
    double max_abs_diff(const Mat4& o) const { return (*this - o).max_abs(); }
};

inline Mat4 operator*(double s, const Mat4& a) { return a * s; }

Mat4 outer(const Vec4& u, const Vec4& v);

/// a (x) b in the fixed tensor order; bilinear, norm-multiplicative.
Vec4 tensor(const Vec2& a, const Vec2& b);

/// Kronecker product laid out so that kron(A, B) * tensor(u, v) equals
/// tensor(A u, B v).
Mat4 kron(const Mat2& a, const Mat2& b);

struct BellStates {
    Vec4 phi_plus;   ///< (e1 + e2)/sqrt2
    Vec4 phi_minus;  ///< (e1 - e2)/sqrt2
    Vec4 psi_plus;   ///< (e3 + e4)/sqrt2
    Vec4 psi_minus;  ///< (e3 - e4)/sqrt2
};

/// The four maximally entangled Bell states; an orthonormal basis.
BellStates bell_states();

/// Columns Phi+, Phi-, Psi+, Psi- expressed in the tensor basis.
Mat4 bell_matrix();

/// <state| sigma_{phi_a} (x) sigma_{phi_b} |state>. For the singlet Psi-
/// this is -cos(phi_a - phi_b). Expects a normalized state.
double correlation(const Vec4& state, double phi_a, double phi_b);

struct BellCheck {
    double lhs;
    double rhs;
    bool violated;  ///< lhs > rhs + 1e-12; boundary cases report false
};

/// Three-angle Bell inequality |P(a,b) - P(a,c)| <= 1 + P(b,c) written for
/// the singlet correlations:
///   |cos(phi_b - phi_a) - cos(phi_c - phi_a)| <= 1 - cos(phi_b - phi_c).
BellCheck bell_inequality(double phi_a, double phi_b, double phi_c);

/// Same inequality in the half-angle variables zeta = (phi_a - phi_b)/2,
/// eta = (phi_b - phi_c)/2:  |sin^2 zeta - sin^2(eta + zeta)| <= sin^2 eta.
BellCheck bell_inequality_sin(double zeta, double eta);

struct ViolationSample {
    double zeta;
    double eta;
    double lhs;
    double rhs;
    bool violated;
};

/// Grid scan of the sin-form inequality over [-pi/2, pi/2]^2. Samples are
/// stored row-major: index i * grid_n + j holds (zeta_i, eta_j). The output
/// does not depend on the worker count.
struct ViolationScan {
    int grid_n;
    std::vector<ViolationSample> samples;
};

ViolationScan violation_scan(int grid_n, int workers = 1);

enum class Subsystem { A, B };

/// Reduced state of one factor of a 4x4 density matrix (unit trace within
/// 1e-10 required). Both reductions of any Bell projector are I/2.
DensityMatrix partial_trace(const Mat4& rho, Subsystem keep);

/// Basis-faithful isomorphism onto C^2:
///   e1 -> (1,0), e2 -> (0,-1), e3 -> (i,0), e4 -> (0,i).
CVec2 iso_r4_to_c2(const Vec4& v);
Vec4 iso_c2_to_r4(const CVec2& z);

/// C^2 <-> quaternion views: z = (w + iz, y + ix).
Quaternion c2_to_quaternion(const CVec2& z);
CVec2 quaternion_to_c2(const Quaternion& q);

/// Flip (z1, z2) -> (-conj z2, conj z1); antilinear, flip^2 = -I.
CVec2 flip(const CVec2& z);

/// Cat operator (I + flip)/sqrt2: maps up/down onto the two elementary
/// equal-weight superpositions.
CVec2 cat_operator(const CVec2& z);

/// Coordinates of the Bell basis in the real basis (e1, e2, i e1, i e2) of
/// C^2, with the column-4 sign fixed so that the cat operator reproduces the
/// Bell-to-C^2 change of coordinates in both components. Column 4 is the
/// image of -Psi- under iso_r4_to_c2.
Mat4 bell_to_c2_matrix();

}  // namespace planeq
