#ifndef GIBBS_LIE_HPP
#define GIBBS_LIE_HPP

#include <array>

#include "gibbs/vec3.hpp"

namespace gibbs {

/// Generator of a Galilean one-parameter motion: rotation omega, boost
/// (acceleration) beta, velocity delta, time epsilon. As a generalized
/// inverse-temperature parameter it is admissible iff epsilon < 0.
struct GalileanAlgebraElement {
    Vec3 omega;
    Vec3 beta;
    Vec3 delta;
    double epsilon = 0.0;
};

/// Group element (A, b, d, e): A a rotation, acting on events as
/// (r, t) -> (A r + t b + d, t + e).
struct GalileanGroupElement {
    Mat3 a = Mat3::identity();
    Vec3 b_vec;
    Vec3 d_vec;
    double e = 0.0;
};

/// Value of the Galilean momentum map for a point particle:
/// ell angular momentum, g center-of-mass moment, p linear momentum,
/// kappa kinetic energy. For a free particle kappa = |p|^2 / (2m).
struct GalileanMomentum {
    Vec3 ell;
    Vec3 g;
    Vec3 p;
    double kappa = 0.0;
};

/// Skew matrix of omega: hat(omega) * r = omega x r.
Mat3 hat(const Vec3& omega);

/// Rotation exp(tau * hat(omega)) by the Rodrigues formula.
Mat3 rotation_exp(const Vec3& omega, double tau = 1.0);

/// exp(tau x) in the Galilean group. The rotation block is Rodrigues; the
/// translation blocks use the analytically summed series with a Taylor
/// fallback for small |omega| tau.
GalileanGroupElement galilean_exp(const GalileanAlgebraElement& x, double tau);

/// Group composition g1 * g2 (left action convention).
GalileanGroupElement galilean_compose(const GalileanGroupElement& g1,
                                      const GalileanGroupElement& g2);

/// Action on a kinematic state: r' = A r + t b + d, v' = A v + b, t' = t + e.
void galilean_act(const GalileanGroupElement& g, Vec3& r, Vec3& v, double& t);

/// J(r, t, v, m) = m (r x v, r - t v, v, |v|^2 / 2). Requires m > 0.
GalileanMomentum free_particle_momentum(const Vec3& r, const Vec3& v, double t, double m);

/// <J, x> = ell.omega - g.beta + p.delta - kappa epsilon.
double galilean_pairing(const GalileanMomentum& j, const GalileanAlgebraElement& x);

/// Momentum map of the rotation action on a sphere of the given radius:
/// J(m) = -radius * m. Rejects points off the sphere (1e-9).
Vec3 sphere_momentum(const Vec3& point, double radius);

/// ad*_X xi on so(3)* with both spaces identified with Euclidean 3-space:
/// the unique eta with eta.Y = xi.(X x Y) for all Y, i.e. xi x X.
Vec3 coadjoint_star(const Vec3& x, const Vec3& xi);

using Mat5 = std::array<std::array<double, 5>, 5>;

/// 5x5 matrix of an algebra element: [[hat(omega), beta, delta], [0,0,eps], [0,0,0]].
Mat5 galilean_algebra_matrix(const GalileanAlgebraElement& x);

/// 5x5 matrix of a group element: [[A, b, d], [0,1,e], [0,0,1]].
Mat5 galilean_group_matrix(const GalileanGroupElement& g);

}  // namespace gibbs

#endif
