#ifndef GIBBS_ORACLE_HPP
#define GIBBS_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

#include "gibbs/domain.hpp"
#include "gibbs/lie.hpp"
#include "gibbs/model_specs.hpp"
#include "gibbs/rng.hpp"

namespace gibbs {

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
    std::uint64_t seed = 0;
};

/// Phase-space points drawn from one density. Rows are samples; each sample
/// holds `n_particles * coords_per_particle` doubles, particles contiguous.
struct SampleBatch {
    enum class Layout { position_momentum, position_only, momentum_only };

    long n_samples = 0;
    int n_particles = 1;
    int coords_per_particle = 6;
    Layout layout = Layout::position_momentum;
    std::vector<double> data;
    /// Per-sample weights; empty means unweighted (all samplers here are
    /// exact or rejection-based, so they leave this empty).
    std::vector<double> weights;
    std::uint64_t seed = 0;

    int sample_dim() const { return n_particles * coords_per_particle; }
    std::span<const double> sample(long i) const {
        return {data.data() + i * sample_dim(), static_cast<size_t>(sample_dim())};
    }
    std::span<double> mutable_sample(long i) {
        return {data.data() + i * sample_dim(), static_cast<size_t>(sample_dim())};
    }
    double coord(long i, int particle, int c) const {
        return data[i * sample_dim() + particle * coords_per_particle + c];
    }
};

using Integrand = std::function<double(std::span<const double>)>;

/// Uniform Monte-Carlo integral over the domain: mean(f) * volume, with the
/// standard error from the sample variance. Sample i draws from the substream
/// split_seed(seed, i), so the result is independent of chunking. n >= 1000.
Estimate mc_integrate(const Domain& domain, const Integrand& f, long n, std::uint64_t seed);

/// Tensor-product Gauss-Legendre integral; box (dim <= 3) or cylinder domains,
/// nodes_per_axis in [8, 256]. The integrand receives Cartesian coordinates.
double gauss_quadrature(const Domain& domain, const Integrand& f, int nodes_per_axis);

// ---------------------------------------------------------------------------
// Exact-law and rejection samplers. All deterministic in (seed, n).
// ---------------------------------------------------------------------------

/// Positions uniform in a cube of the spec volume (corner at the origin),
/// momentum components independent normals of variance m_i / b.
SampleBatch sample_ideal(const IdealGasSpec& spec, double b, long n, std::uint64_t seed);

/// Momentum vectors with density ~ exp(-b c sqrt(p^2 + m^2 c^2)); rejection
/// from the massless proposal ~ exp(-b c p) (Gamma(3, 1/(bc)) modulus,
/// isotropic direction), acceptance exp(-bc (sqrt(p^2+m^2c^2) - p)).
SampleBatch sample_juttner(double m, double c, double b, long n, std::uint64_t seed);

/// Points on the sphere with density ~ exp(R Om.b), rejection against the
/// uniform measure with envelope exp(R^2 |b|).
SampleBatch sample_sphere(const SphereSpec& spec, const Vec3& b, long n, std::uint64_t seed);

/// Moving-vessel equilibrium: per particle, momenta exact normals of variance
/// m_i/(-epsilon) and positions by rejection against the uniform law on the
/// geometry. Requires epsilon < 0.
SampleBatch sample_vessel(const VesselSpec& spec, const GalileanAlgebraElement& b, long n,
                          std::uint64_t seed);

/// Positions uniform in the vessel, momentum moduli from the massless law
/// (exact, no rejection), one particle per listed photon.
SampleBatch sample_massless(const MasslessGasSpec& spec, double b, long n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Goodness of fit.
// ---------------------------------------------------------------------------

struct GofResult {
    double chi_square = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Chi-square test of 1-d projected samples against an (unnormalized) density
/// on [lo, hi]. Equal-width bins; any bin with expected count < 5 is merged
/// into its neighbour. bins >= 5; at least 2 effective bins must survive.
GofResult gof_statistic(std::span<const double> projected, const std::function<double(double)>& density,
                        int bins, double lo, double hi);

/// Same, projecting each sample of the batch first.
GofResult gof_statistic(const SampleBatch& batch, const Integrand& project,
                        const std::function<double(double)>& density, int bins, double lo,
                        double hi);

/// CSV export: sample_id, particle_id, x, y, z, px, py, pz (absent coordinates
/// are written as 0). Fixed 17-significant-digit formatting.
void write_batch_csv(std::ostream& os, const SampleBatch& batch);

}  // namespace gibbs

#endif
