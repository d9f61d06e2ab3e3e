#include "gibbs/lie.hpp"

#include <cmath>
#include <stdexcept>

#include "gibbs/numerics.hpp"

namespace gibbs {

Mat3 hat(const Vec3& w) {
    Mat3 m;
    m(0, 1) = -w.z;
    m(0, 2) = w.y;
    m(1, 0) = w.z;
    m(1, 2) = -w.x;
    m(2, 0) = -w.y;
    m(2, 1) = w.x;
    return m;
}

Mat3 rotation_exp(const Vec3& omega, double tau) {
    const double theta = omega.norm();
    const double x = tau * theta;
    const Mat3 j = hat(omega);
    const Mat3 j2 = j * j;
    // exp(tau J) = I + tau sinc(x) J + tau^2 g1(x) J^2, J^3 = -theta^2 J.
    return Mat3::identity() + tau * num::sinc(x) * j + tau * tau * num::g1_cos(x) * j2;
}

GalileanGroupElement galilean_exp(const GalileanAlgebraElement& x, double tau) {
    const double theta = x.omega.norm();
    const double xt = tau * theta;
    const Mat3 j = hat(x.omega);
    const Mat3 j2 = j * j;

    // B(tau) = sum_{n>=1} tau^n/n! J^{n-1} = tau I + tau^2 g1 J + tau^3 g2 J^2
    // C(tau) = sum_{n>=2} tau^n/n! J^{n-2} = tau^2/2 I + tau^3 g2 J + tau^4 g3 J^2
    const Mat3 b_series = tau * Mat3::identity() + (tau * tau * num::g1_cos(xt)) * j
                        + (tau * tau * tau * num::g2_sin(xt)) * j2;
    const Mat3 c_series = (tau * tau / 2.0) * Mat3::identity()
                        + (tau * tau * tau * num::g2_sin(xt)) * j
                        + (tau * tau * tau * tau * num::g3_cos(xt)) * j2;

    GalileanGroupElement g;
    g.a = rotation_exp(x.omega, tau);
    g.b_vec = b_series * x.beta;
    g.d_vec = b_series * x.delta + x.epsilon * (c_series * x.beta);
    g.e = tau * x.epsilon;
    return g;
}

GalileanGroupElement galilean_compose(const GalileanGroupElement& g1,
                                      const GalileanGroupElement& g2) {
    GalileanGroupElement g;
    g.a = g1.a * g2.a;
    g.b_vec = g1.a * g2.b_vec + g1.b_vec;
    g.d_vec = g1.a * g2.d_vec + g2.e * g1.b_vec + g1.d_vec;
    g.e = g1.e + g2.e;
    return g;
}

void galilean_act(const GalileanGroupElement& g, Vec3& r, Vec3& v, double& t) {
    const Vec3 r_new = g.a * r + t * g.b_vec + g.d_vec;
    const Vec3 v_new = g.a * v + g.b_vec;
    r = r_new;
    v = v_new;
    t = t + g.e;
}

GalileanMomentum free_particle_momentum(const Vec3& r, const Vec3& v, double t, double m) {
    if (!(m > 0.0)) throw std::invalid_argument("free_particle_momentum: mass must be positive");
    GalileanMomentum j;
    j.ell = m * cross(r, v);
    j.g = m * (r - t * v);
    j.p = m * v;
    j.kappa = 0.5 * m * v.norm2();
    return j;
}

double galilean_pairing(const GalileanMomentum& j, const GalileanAlgebraElement& x) {
    return dot(j.ell, x.omega) - dot(j.g, x.beta) + dot(j.p, x.delta) - j.kappa * x.epsilon;
}

Vec3 sphere_momentum(const Vec3& point, double radius) {
    if (std::abs(point.norm() - radius) > 1e-9 * std::max(1.0, radius))
        throw std::invalid_argument("sphere_momentum: point is not on the sphere");
    return -radius * point;
}

Vec3 coadjoint_star(const Vec3& x, const Vec3& xi) { return cross(xi, x); }

Mat5 galilean_algebra_matrix(const GalileanAlgebraElement& x) {
    Mat5 m{};
    const Mat3 j = hat(x.omega);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = j(r, c);
    m[0][3] = x.beta.x;
    m[1][3] = x.beta.y;
    m[2][3] = x.beta.z;
    m[0][4] = x.delta.x;
    m[1][4] = x.delta.y;
    m[2][4] = x.delta.z;
    m[3][4] = x.epsilon;
    return m;
}

Mat5 galilean_group_matrix(const GalileanGroupElement& g) {
    Mat5 m{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = g.a(r, c);
    m[0][3] = g.b_vec.x;
    m[1][3] = g.b_vec.y;
    m[2][3] = g.b_vec.z;
    m[0][4] = g.d_vec.x;
    m[1][4] = g.d_vec.y;
    m[2][4] = g.d_vec.z;
    m[3][3] = 1.0;
    m[3][4] = g.e;
    m[4][4] = 1.0;
    return m;
}

}  // namespace gibbs
