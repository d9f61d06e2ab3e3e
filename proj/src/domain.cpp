#include "gibbs/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace gibbs {

int Domain::spatial_dim() const {
    switch (kind) {
        case Kind::box: return static_cast<int>(box_lo.size());
        case Kind::cylinder: return 3;
        case Kind::sphere_surface: return 3;  // stored as an on-sphere 3-vector
        case Kind::full_momentum_space: return 0;
    }
    return 0;
}

int Domain::dim_per_particle() const {
    return spatial_dim() + (momentum_radius > 0.0 ? 3 : 0);
}

namespace {
double ball_volume(double r) { return 4.0 / 3.0 * M_PI * r * r * r; }
}  // namespace

double Domain::volume() const {
    double spatial = 1.0;
    switch (kind) {
        case Kind::box:
            for (size_t i = 0; i < box_lo.size(); ++i) spatial *= box_hi[i] - box_lo[i];
            break;
        case Kind::cylinder:
            spatial = M_PI * cyl_radius * cyl_radius * cyl_height;
            break;
        case Kind::sphere_surface:
            spatial = 4.0 * M_PI * sphere_radius * sphere_radius;
            break;
        case Kind::full_momentum_space:
            spatial = 1.0;
            break;
    }
    const double per_particle =
        spatial * (momentum_radius > 0.0 ? ball_volume(momentum_radius) : 1.0);
    double v = 1.0;
    for (int i = 0; i < particles; ++i) v *= per_particle;
    return v;
}

void Domain::sample(CounterRng& rng, std::span<double> out) const {
    const int dpp = dim_per_particle();
    const int sd = spatial_dim();
    for (int p = 0; p < particles; ++p) {
        double* q = out.data() + p * dpp;
        switch (kind) {
            case Kind::box:
                for (int i = 0; i < sd; ++i) q[i] = rng.uniform(box_lo[i], box_hi[i]);
                break;
            case Kind::cylinder: {
                const double r = cyl_radius * std::sqrt(rng.uniform());
                const double phi = 2.0 * M_PI * rng.uniform();
                q[0] = r * std::cos(phi);
                q[1] = r * std::sin(phi);
                q[2] = rng.uniform(0.0, cyl_height);
                break;
            }
            case Kind::sphere_surface: {
                const Vec3 u = rng.isotropic();
                q[0] = sphere_radius * u.x;
                q[1] = sphere_radius * u.y;
                q[2] = sphere_radius * u.z;
                break;
            }
            case Kind::full_momentum_space:
                break;
        }
        if (momentum_radius > 0.0) {
            // Uniform in the ball: isotropic direction, radius ~ R u^{1/3}.
            const Vec3 u = rng.isotropic();
            const double r = momentum_radius * std::cbrt(rng.uniform());
            q[sd + 0] = r * u.x;
            q[sd + 1] = r * u.y;
            q[sd + 2] = r * u.z;
        }
    }
}

bool Domain::contains(std::span<const double> point, double tol) const {
    const int dpp = dim_per_particle();
    const int sd = spatial_dim();
    for (int p = 0; p < particles; ++p) {
        const double* q = point.data() + p * dpp;
        switch (kind) {
            case Kind::box:
                for (int i = 0; i < sd; ++i)
                    if (q[i] < box_lo[i] - tol || q[i] > box_hi[i] + tol) return false;
                break;
            case Kind::cylinder: {
                if (std::hypot(q[0], q[1]) > cyl_radius + tol) return false;
                if (q[2] < -tol || q[2] > cyl_height + tol) return false;
                break;
            }
            case Kind::sphere_surface: {
                const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
                if (std::abs(n - sphere_radius) > 1e-9 * std::max(1.0, sphere_radius))
                    return false;
                break;
            }
            case Kind::full_momentum_space:
                break;
        }
        if (momentum_radius > 0.0) {
            const double n =
                std::sqrt(q[sd] * q[sd] + q[sd + 1] * q[sd + 1] + q[sd + 2] * q[sd + 2]);
            if (n > momentum_radius + tol) return false;
        }
    }
    return true;
}

Domain Domain::box_nd(std::vector<double> lo, std::vector<double> hi, int particles,
                      double momentum_radius, double tail_bound) {
    if (lo.size() != hi.size() || lo.empty())
        throw std::invalid_argument("Domain::box_nd: corner size mismatch");
    for (size_t i = 0; i < lo.size(); ++i)
        if (!(hi[i] > lo[i])) throw std::invalid_argument("Domain::box_nd: empty extent");
    Domain d;
    d.kind = Kind::box;
    d.particles = particles;
    d.box_lo = std::move(lo);
    d.box_hi = std::move(hi);
    d.momentum_radius = momentum_radius;
    d.tail_bound = tail_bound;
    return d;
}

Domain Domain::cylinder(double radius, double height, int particles, double momentum_radius,
                        double tail_bound) {
    if (!(radius > 0.0) || !(height > 0.0))
        throw std::invalid_argument("Domain::cylinder: extents must be positive");
    Domain d;
    d.kind = Kind::cylinder;
    d.particles = particles;
    d.cyl_radius = radius;
    d.cyl_height = height;
    d.momentum_radius = momentum_radius;
    d.tail_bound = tail_bound;
    return d;
}

Domain Domain::sphere_surface(double radius, int particles) {
    if (!(radius > 0.0)) throw std::invalid_argument("Domain::sphere_surface: radius > 0");
    Domain d;
    d.kind = Kind::sphere_surface;
    d.particles = particles;
    d.sphere_radius = radius;
    return d;
}

Domain Domain::momentum_space(double truncation_radius, int particles, double tail_bound) {
    if (!(truncation_radius > 0.0))
        throw std::invalid_argument("Domain::momentum_space: truncation radius > 0");
    Domain d;
    d.kind = Kind::full_momentum_space;
    d.particles = particles;
    d.momentum_radius = truncation_radius;
    d.tail_bound = tail_bound;
    return d;
}

namespace {

// Tail mass of the radial integrals, closed forms:
//   Gaussian: int_P^inf r^2 e^{-r^2/2s^2} dr = s^2 P e^{-P^2/2s^2}
//             + s^3 sqrt(pi/2) erfc(P/(s sqrt 2)); full integral s^3 sqrt(pi/2).
//   Exponential: int_P^inf r^2 e^{-k r} dr = e^{-kP}(P^2/k + 2P/k^2 + 2/k^3);
//             full integral 2/k^3.
double gaussian_tail_fraction(double p, double s) {
    const double full = s * s * s * std::sqrt(M_PI / 2.0);
    const double t = p / (s * std::sqrt(2.0));
    const double tail = s * s * p * std::exp(-0.5 * (p / s) * (p / s))
                      + s * s * s * std::sqrt(M_PI / 2.0) * std::erfc(t);
    return tail / full;
}

double exponential_tail_fraction(double p, double k) {
    const double full = 2.0 / (k * k * k);
    const double tail = std::exp(-k * p) * (p * p / k + 2.0 * p / (k * k) + 2.0 / (k * k * k));
    return tail / full;
}

template <typename F>
double bisect_radius(F tail_fraction, double rel_tol, double* achieved) {
    double lo = 0.0, hi = 1.0;
    while (tail_fraction(hi) > rel_tol) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (tail_fraction(mid) > rel_tol)
            lo = mid;
        else
            hi = mid;
    }
    if (achieved) *achieved = tail_fraction(hi);
    return hi;
}

}  // namespace

double gaussian_ball_truncation(double sigma, double rel_tol, double* achieved_tail) {
    if (!(sigma > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("gaussian_ball_truncation: bad arguments");
    // Small margin keeps the bound strict under downstream rounding.
    return bisect_radius([sigma](double p) { return gaussian_tail_fraction(p, sigma); },
                         0.99 * rel_tol, achieved_tail);
}

double exponential_ball_truncation(double k, double rel_tol, double* achieved_tail) {
    if (!(k > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("exponential_ball_truncation: bad arguments");
    return bisect_radius([k](double p) { return exponential_tail_fraction(p, k); },
                         0.99 * rel_tol, achieved_tail);
}

}  // namespace gibbs
