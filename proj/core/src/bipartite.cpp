#include "planeq/bipartite.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace planeq {

namespace {
// Factor indices behind each tensor slot: slot i holds |kA[i]> (x) |kB[i]>
// with 0 = |0>, 1 = |pi/2>.
constexpr int kA[4] = {0, 1, 0, 1};
constexpr int kB[4] = {0, 1, 1, 0};
// slot(a, b): tensor index of |a> (x) |b>.
constexpr int kSlot[2][2] = {{0, 2}, {3, 1}};

double mat2_at(const Mat2& m, int i, int j) {
    return i == 0 ? (j == 0 ? m.a00 : m.a01) : (j == 0 ? m.a10 : m.a11);
}
}  // namespace

Vec4 Vec4::operator+(const Vec4& o) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r.v[i] = v[i] + o.v[i];
    return r;
}
Vec4 Vec4::operator-(const Vec4& o) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r.v[i] = v[i] - o.v[i];
    return r;
}
Vec4 Vec4::operator*(double s) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r.v[i] = v[i] * s;
    return r;
}
double Vec4::dot(const Vec4& o) const {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += v[i] * o.v[i];
    return s;
}
double Vec4::norm() const { return std::sqrt(dot(*this)); }
double Vec4::max_abs_diff(const Vec4& o) const {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(v[i] - o.v[i]));
    return m;
}

Mat4 Mat4::identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
}
Mat4 Mat4::operator+(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = m[i] + o.m[i];
    return r;
}
Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = m[i] - o.m[i];
    return r;
}
Mat4 Mat4::operator*(double s) const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = m[i] * s;
    return r;
}
Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}
Vec4 Mat4::operator*(const Vec4& x) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += (*this)(i, j) * x[j];
        r[i] = s;
    }
    return r;
}
Mat4 Mat4::transpose() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
    return r;
}
double Mat4::max_abs() const {
    double s = 0.0;
    for (double x : m) s = std::max(s, std::abs(x));
    return s;
}

Mat4 outer(const Vec4& u, const Vec4& v) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = u[i] * v[j];
    return r;
}

Vec4 tensor(const Vec2& a, const Vec2& b) {
    const double av[2] = {a.x, a.y}, bv[2] = {b.x, b.y};
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = av[kA[i]] * bv[kB[i]];
    return r;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = mat2_at(a, kA[i], kA[j]) * mat2_at(b, kB[i], kB[j]);
    return r;
}

BellStates bell_states() {
    const double s = 1.0 / std::sqrt(2.0);
    return {Vec4{{s, s, 0.0, 0.0}}, Vec4{{s, -s, 0.0, 0.0}},
            Vec4{{0.0, 0.0, s, s}}, Vec4{{0.0, 0.0, s, -s}}};
}

Mat4 bell_matrix() {
    const BellStates b = bell_states();
    const Vec4* cols[4] = {&b.phi_plus, &b.phi_minus, &b.psi_plus, &b.psi_minus};
    Mat4 r;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) r(i, j) = (*cols[j])[i];
    return r;
}

double correlation(const Vec4& state, double phi_a, double phi_b) {
    const Mat4 op = kron(sigma_phi(phi_a).matrix(), sigma_phi(phi_b).matrix());
    return state.dot(op * state);
}

namespace {
constexpr double kViolationTol = 1e-12;

BellCheck make_check(double lhs, double rhs) {
    return {lhs, rhs, lhs > rhs + kViolationTol};
}
}  // namespace

BellCheck bell_inequality(double phi_a, double phi_b, double phi_c) {
    return make_check(std::abs(std::cos(phi_b - phi_a) - std::cos(phi_c - phi_a)),
                      1.0 - std::cos(phi_b - phi_c));
}

BellCheck bell_inequality_sin(double zeta, double eta) {
    const double sz = std::sin(zeta), sez = std::sin(eta + zeta), se = std::sin(eta);
    return make_check(std::abs(sz * sz - sez * sez), se * se);
}

ViolationScan violation_scan(int grid_n, int workers) {
    if (grid_n < 8) throw std::invalid_argument("violation_scan: grid_n must be >= 8");
    workers = std::max(1, std::min({workers, grid_n, 64}));

    ViolationScan scan{grid_n, std::vector<ViolationSample>(
                                   static_cast<std::size_t>(grid_n) * grid_n)};
    const double step = pi / (grid_n - 1);
    const auto fill_rows = [&](int row_begin, int row_end) {
        for (int i = row_begin; i < row_end; ++i) {
            const double zeta = -half_pi + i * step;
            for (int j = 0; j < grid_n; ++j) {
                const double eta = -half_pi + j * step;
                const BellCheck c = bell_inequality_sin(zeta, eta);
                scan.samples[static_cast<std::size_t>(i) * grid_n + j] =
                    {zeta, eta, c.lhs, c.rhs, c.violated};
            }
        }
    };

    if (workers == 1) {
        fill_rows(0, grid_n);
        return scan;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (grid_n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = w * chunk, hi = std::min(grid_n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fill_rows, lo, hi);
    }
    for (auto& th : pool) th.join();
    return scan;
}

DensityMatrix partial_trace(const Mat4& rho, Subsystem keep) {
    if (std::abs(rho.trace() - 1.0) > 1e-10) {
        throw std::invalid_argument("partial_trace: input trace is not 1");
    }
    double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (keep == Subsystem::A) {
                    m[i][j] += rho(kSlot[i][k], kSlot[j][k]);
                } else {
                    m[i][j] += rho(kSlot[k][i], kSlot[k][j]);
                }
            }
    return DensityMatrix::from_ab(m[0][0], 0.5 * (m[0][1] + m[1][0]));
}

CVec2 iso_r4_to_c2(const Vec4& v) {
    return {complexd(v[0], v[2]), complexd(-v[1], v[3])};
}

Vec4 iso_c2_to_r4(const CVec2& z) {
    return Vec4{{z.z1.real(), -z.z2.real(), z.z1.imag(), z.z2.imag()}};
}

Quaternion c2_to_quaternion(const CVec2& z) {
    return {z.z1.real(), z.z2.imag(), z.z2.real(), z.z1.imag()};
}

CVec2 quaternion_to_c2(const Quaternion& q) {
    return {complexd(q.w, q.z), complexd(q.y, q.x)};
}

CVec2 flip(const CVec2& z) { return {-std::conj(z.z2), std::conj(z.z1)}; }

CVec2 cat_operator(const CVec2& z) {
    const double s = 1.0 / std::sqrt(2.0);
    const CVec2 f = flip(z);
    return {(z.z1 + f.z1) * s, (z.z2 + f.z2) * s};
}

Mat4 bell_to_c2_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 r;
    const double rows[4][4] = {{1, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = s * rows[i][j];
    return r;
}

}  // namespace planeq
