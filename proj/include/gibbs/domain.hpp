#ifndef GIBBS_DOMAIN_HPP
#define GIBBS_DOMAIN_HPP

#include <span>
#include <vector>

#include "gibbs/rng.hpp"

namespace gibbs {

/// Integration region of a phase space: a spatial region per particle,
/// optionally times a truncated momentum ball per particle. Phase points are
/// flattened per particle as (x, y, z[, px, py, pz]); a bare box may have any
/// dimension (used for low-dimensional quadrature domains).
struct Domain {
    enum class Kind { box, cylinder, sphere_surface, full_momentum_space };

    Kind kind = Kind::box;
    int particles = 1;

    std::vector<double> box_lo{0.0, 0.0, 0.0};
    std::vector<double> box_hi{1.0, 1.0, 1.0};

    double cyl_radius = 0.0;
    double cyl_height = 0.0;

    double sphere_radius = 0.0;

    /// Momentum truncation radius per particle; 0 means no momentum block.
    /// full_momentum_space requires it to be positive.
    double momentum_radius = 0.0;
    /// Recorded relative bound on the discarded momentum tail (must be < 1e-12
    /// of the estimate for oracle use; computed by the caller, not guessed).
    double tail_bound = 0.0;

    int spatial_dim() const;
    int dim_per_particle() const;
    int dim() const { return particles * dim_per_particle(); }

    /// Product measure of the sampling region (area for sphere surfaces).
    double volume() const;

    /// Draws a uniform point; writes dim() coordinates.
    void sample(CounterRng& rng, std::span<double> out) const;

    bool contains(std::span<const double> point, double tol = 1e-12) const;

    static Domain box_nd(std::vector<double> lo, std::vector<double> hi, int particles = 1,
                         double momentum_radius = 0.0, double tail_bound = 0.0);
    static Domain cylinder(double radius, double height, int particles = 1,
                           double momentum_radius = 0.0, double tail_bound = 0.0);
    static Domain sphere_surface(double radius, int particles = 1);
    static Domain momentum_space(double truncation_radius, int particles, double tail_bound);
};

/// Truncation radius P with the Gaussian ball tail mass
/// int_{|p|>P} exp(-|p|^2/2 sigma^2) d^3p below rel_tol of the full integral.
/// Returns the radius; `achieved_tail` reports the analytic bound.
double gaussian_ball_truncation(double sigma, double rel_tol, double* achieved_tail = nullptr);

/// Same for an exponential-tail law: int_{|p|>P} exp(-k |p|) d^3p.
double exponential_ball_truncation(double k, double rel_tol, double* achieved_tail = nullptr);

}  // namespace gibbs

#endif
