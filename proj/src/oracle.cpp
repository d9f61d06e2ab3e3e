#include "gibbs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gibbs/errors.hpp"
#include "gibbs/models.hpp"
#include "gibbs/numerics.hpp"

namespace gibbs {

Estimate mc_integrate(const Domain& domain, const Integrand& f, long n, std::uint64_t seed) {
    if (n < 1000) throw std::invalid_argument("mc_integrate: n must be at least 1000");
    const double vol = domain.volume();
    if (!(vol > 0.0)) throw std::invalid_argument("mc_integrate: zero-volume domain");

    const int dim = domain.dim();
    std::vector<double> point(dim);
    double mean = 0.0, m2 = 0.0;
    for (long i = 0; i < n; ++i) {
        CounterRng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
        domain.sample(rng, point);
        const double v = f(point);
        const double delta = v - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (v - mean);
    }
    const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    Estimate est;
    est.value = vol * mean;
    est.std_error = vol * std::sqrt(var / static_cast<double>(n));
    est.n_samples = n;
    est.seed = seed;
    return est;
}

double gauss_quadrature(const Domain& domain, const Integrand& f, int nodes_per_axis) {
    if (nodes_per_axis < 8 || nodes_per_axis > 256)
        throw std::invalid_argument("gauss_quadrature: nodes_per_axis in [8, 256]");
    if (domain.particles != 1 || domain.momentum_radius > 0.0)
        throw std::invalid_argument("gauss_quadrature: plain spatial domains only");

    const num::GaussRule& rule = num::gauss_legendre_rule(nodes_per_axis);
    const int n = nodes_per_axis;

    if (domain.kind == Domain::Kind::box) {
        const int dim = static_cast<int>(domain.box_lo.size());
        if (dim > 3) throw std::invalid_argument("gauss_quadrature: dimension must be <= 3");
        std::vector<double> mid(dim), hw(dim);
        for (int d = 0; d < dim; ++d) {
            mid[d] = 0.5 * (domain.box_lo[d] + domain.box_hi[d]);
            hw[d] = 0.5 * (domain.box_hi[d] - domain.box_lo[d]);
        }
        std::vector<double> x(dim);
        double total = 0.0;
        const long cells = static_cast<long>(std::pow(n, dim));
        for (long idx = 0; idx < cells; ++idx) {
            long rem = idx;
            double w = 1.0;
            for (int d = 0; d < dim; ++d) {
                const int i = static_cast<int>(rem % n);
                rem /= n;
                x[d] = mid[d] + hw[d] * rule.nodes[i];
                w *= hw[d] * rule.weights[i];
            }
            total += w * f(x);
        }
        return total;
    }

    if (domain.kind == Domain::Kind::cylinder) {
        // (radius, angle, z) tensor rule with the cylindrical Jacobian.
        double total = 0.0;
        std::vector<double> x(3);
        for (int ir = 0; ir < n; ++ir) {
            const double r = 0.5 * domain.cyl_radius * (1.0 + rule.nodes[ir]);
            const double wr = 0.5 * domain.cyl_radius * rule.weights[ir] * r;
            for (int ia = 0; ia < n; ++ia) {
                const double phi = M_PI * (1.0 + rule.nodes[ia]);
                const double wa = M_PI * rule.weights[ia];
                for (int iz = 0; iz < n; ++iz) {
                    const double z = 0.5 * domain.cyl_height * (1.0 + rule.nodes[iz]);
                    const double wz = 0.5 * domain.cyl_height * rule.weights[iz];
                    x[0] = r * std::cos(phi);
                    x[1] = r * std::sin(phi);
                    x[2] = z;
                    total += wr * wa * wz * f(x);
                }
            }
        }
        return total;
    }

    throw std::invalid_argument("gauss_quadrature: unsupported domain kind");
}

// ---------------------------------------------------------------------------

SampleBatch sample_ideal(const IdealGasSpec& spec, double b, long n, std::uint64_t seed) {
    if (!(b > 0.0)) throw AdmissibilityError("sample_ideal: requires b > 0");
    const int np = static_cast<int>(spec.masses.size());
    const double side = std::cbrt(spec.volume);

    SampleBatch batch;
    batch.n_samples = n;
    batch.n_particles = np;
    batch.coords_per_particle = 6;
    batch.layout = SampleBatch::Layout::position_momentum;
    batch.seed = seed;
    batch.data.resize(static_cast<size_t>(n) * np * 6);

    for (long i = 0; i < n; ++i) {
        CounterRng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
        auto s = batch.mutable_sample(i);
        for (int p = 0; p < np; ++p) {
            const double sigma = std::sqrt(spec.masses[p] / b);
            double* q = s.data() + p * 6;
            for (int d = 0; d < 3; ++d) q[d] = rng.uniform(0.0, side);
            for (int d = 0; d < 3; ++d) q[3 + d] = sigma * rng.normal();
        }
    }
    return batch;
}

SampleBatch sample_juttner(double m, double c, double b, long n, std::uint64_t seed) {
    if (!(m > 0.0) || !(c > 0.0) || !(b > 0.0))
        throw std::invalid_argument("sample_juttner: m, c, b must be positive");

    SampleBatch batch;
    batch.n_samples = n;
    batch.n_particles = 1;
    batch.coords_per_particle = 3;
    batch.layout = SampleBatch::Layout::momentum_only;
    batch.seed = seed;
    batch.data.resize(static_cast<size_t>(n) * 3);

    const double mc = m * c;
    const double bc = b * c;
    long proposals = 0, accepted = 0;
    for (long i = 0; i < n; ++i) {
        CounterRng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
        double p = 0.0;
        for (;;) {
            ++proposals;
            p = rng.gamma3(1.0 / bc);
            const double ratio = std::exp(-bc * (std::sqrt(p * p + mc * mc) - p));
            if (rng.uniform() < ratio) {
                ++accepted;
                break;
            }
            if (proposals > 64 && static_cast<double>(accepted) / proposals < 1e-6)
                throw EstimationError("sample_juttner: acceptance rate below 1e-6", 0.0);
        }
        const Vec3 u = rng.isotropic();
        batch.data[i * 3 + 0] = p * u.x;
        batch.data[i * 3 + 1] = p * u.y;
        batch.data[i * 3 + 2] = p * u.z;
    }
    return batch;
}

SampleBatch sample_sphere(const SphereSpec& spec, const Vec3& b, long n, std::uint64_t seed) {
    const double r = spec.radius;
    const double env = r * r * b.norm();  // log of the envelope constant

    SampleBatch batch;
    batch.n_samples = n;
    batch.n_particles = 1;
    batch.coords_per_particle = 3;
    batch.layout = SampleBatch::Layout::position_only;
    batch.seed = seed;
    batch.data.resize(static_cast<size_t>(n) * 3);

    for (long i = 0; i < n; ++i) {
        CounterRng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
        for (;;) {
            const Vec3 om = r * rng.isotropic();
            const double log_ratio = r * dot(om, b) - env;
            if (std::log(rng.uniform_pos()) < log_ratio) {
                batch.data[i * 3 + 0] = om.x;
                batch.data[i * 3 + 1] = om.y;
                batch.data[i * 3 + 2] = om.z;
                break;
            }
        }
    }
    return batch;
}

SampleBatch sample_vessel(const VesselSpec& spec, const GalileanAlgebraElement& b, long n,
                          std::uint64_t seed) {
    if (!(b.epsilon < 0.0)) throw AdmissibilityError("sample_vessel: requires epsilon < 0");
    const int np = static_cast<int>(spec.masses.size());

    // Lower bound of the frame potential over the geometry, from norm bounds;
    // gives a valid rejection envelope for exp(eps m f).
    const double rmax = spec.geometry.max_point_norm();
    const double eps = b.epsilon;
    const double u_max = (b.omega.norm() * rmax + b.delta.norm());
    const double f_lo = -rmax * b.beta.norm() / std::abs(eps) - u_max * u_max / (2.0 * eps * eps);
    if (!std::isfinite(f_lo))
        throw std::invalid_argument("sample_vessel: frame potential unbounded on the geometry");

    SampleBatch batch;
    batch.n_samples = n;
    batch.n_particles = np;
    batch.coords_per_particle = 6;
    batch.layout = SampleBatch::Layout::position_momentum;
    batch.seed = seed;
    batch.data.resize(static_cast<size_t>(n) * np * 6);

    for (long i = 0; i < n; ++i) {
        CounterRng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
        auto s = batch.mutable_sample(i);
        for (int p = 0; p < np; ++p) {
            const double m = spec.masses[p];
            double* q = s.data() + p * 6;
            for (;;) {
                Vec3 r;
                if (spec.geometry.kind == VesselGeometry::Kind::box) {
                    r = {rng.uniform(spec.geometry.box_lo.x, spec.geometry.box_hi.x),
                         rng.uniform(spec.geometry.box_lo.y, spec.geometry.box_hi.y),
                         rng.uniform(spec.geometry.box_lo.z, spec.geometry.box_hi.z)};
                } else {
                    const double rad = spec.geometry.cyl_radius * std::sqrt(rng.uniform());
                    const double phi = 2.0 * M_PI * rng.uniform();
                    r = {rad * std::cos(phi), rad * std::sin(phi),
                         rng.uniform(0.0, spec.geometry.cyl_height)};
                }
                const double log_ratio = eps * m * (frame_potential(b, r) - f_lo);
                if (std::log(rng.uniform_pos()) < log_ratio) {
                    q[0] = r.x;
                    q[1] = r.y;
                    q[2] = r.z;
                    break;
                }
            }
            const double sigma = std::sqrt(m / (-eps));
            for (int d = 0; d < 3; ++d) q[3 + d] = sigma * rng.normal();
        }
    }
    return batch;
}

SampleBatch sample_massless(const MasslessGasSpec& spec, double b, long n, std::uint64_t seed) {
    if (!(b > 0.0)) throw AdmissibilityError("sample_massless: requires b > 0");
    const int np = spec.n_particles;
    const double side = std::cbrt(spec.volume);
    const double bc = b * spec.light_speed;

    SampleBatch batch;
    batch.n_samples = n;
    batch.n_particles = np;
    batch.coords_per_particle = 6;
    batch.layout = SampleBatch::Layout::position_momentum;
    batch.seed = seed;
    batch.data.resize(static_cast<size_t>(n) * np * 6);

    for (long i = 0; i < n; ++i) {
        CounterRng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
        auto s = batch.mutable_sample(i);
        for (int p = 0; p < np; ++p) {
            double* q = s.data() + p * 6;
            for (int d = 0; d < 3; ++d) q[d] = rng.uniform(0.0, side);
            const double mod = rng.gamma3(1.0 / bc);
            const Vec3 u = rng.isotropic();
            q[3] = mod * u.x;
            q[4] = mod * u.y;
            q[5] = mod * u.z;
        }
    }
    return batch;
}

// ---------------------------------------------------------------------------

GofResult gof_statistic(std::span<const double> projected,
                        const std::function<double(double)>& density, int bins, double lo,
                        double hi) {
    if (bins < 5) throw std::invalid_argument("gof_statistic: at least 5 bins");
    if (projected.empty()) throw std::invalid_argument("gof_statistic: empty sample");
    if (!(hi > lo)) throw std::invalid_argument("gof_statistic: empty range");

    const long n = static_cast<long>(projected.size());
    const double width = (hi - lo) / bins;

    std::vector<double> counts(bins, 0.0);
    for (double v : projected) {
        int k = static_cast<int>((v - lo) / width);
        if (k < 0) k = 0;
        if (k >= bins) k = bins - 1;
        counts[k] += 1.0;
    }

    std::vector<double> expected(bins);
    double total_mass = 0.0;
    for (int k = 0; k < bins; ++k) {
        expected[k] = num::gauss_legendre(density, lo + k * width, lo + (k + 1) * width, 16);
        total_mass += expected[k];
    }
    if (!(total_mass > 0.0)) throw std::invalid_argument("gof_statistic: density has zero mass");
    for (double& e : expected) e *= static_cast<double>(n) / total_mass;

    // Merge low-expectation bins into the previous one.
    std::vector<double> mc, me;
    for (int k = 0; k < bins; ++k) {
        if (!me.empty() && me.back() < 5.0) {
            me.back() += expected[k];
            mc.back() += counts[k];
        } else {
            me.push_back(expected[k]);
            mc.push_back(counts[k]);
        }
    }
    if (me.size() >= 2 && me.back() < 5.0) {
        me[me.size() - 2] += me.back();
        mc[mc.size() - 2] += mc.back();
        me.pop_back();
        mc.pop_back();
    }
    if (me.size() < 2) throw std::invalid_argument("gof_statistic: degenerate binning");

    GofResult res;
    for (size_t k = 0; k < me.size(); ++k) {
        const double d = mc[k] - me[k];
        res.chi_square += d * d / me[k];
    }
    res.dof = static_cast<int>(me.size()) - 1;
    res.p_value = num::chi_square_sf(res.chi_square, res.dof);
    return res;
}

GofResult gof_statistic(const SampleBatch& batch, const Integrand& project,
                        const std::function<double(double)>& density, int bins, double lo,
                        double hi) {
    std::vector<double> values(batch.n_samples);
    for (long i = 0; i < batch.n_samples; ++i) values[i] = project(batch.sample(i));
    return gof_statistic(values, density, bins, lo, hi);
}

void write_batch_csv(std::ostream& os, const SampleBatch& batch) {
    os << "sample_id,particle_id,x,y,z,px,py,pz\n";
    char buf[512];
    for (long i = 0; i < batch.n_samples; ++i) {
        for (int p = 0; p < batch.n_particles; ++p) {
            double x = 0, y = 0, z = 0, px = 0, py = 0, pz = 0;
            const double* q = batch.data.data() + (i * batch.n_particles + p) * batch.coords_per_particle;
            switch (batch.layout) {
                case SampleBatch::Layout::position_momentum:
                    x = q[0]; y = q[1]; z = q[2]; px = q[3]; py = q[4]; pz = q[5];
                    break;
                case SampleBatch::Layout::position_only:
                    x = q[0]; y = q[1]; z = q[2];
                    break;
                case SampleBatch::Layout::momentum_only:
                    px = q[0]; py = q[1]; pz = q[2];
                    break;
            }
            std::snprintf(buf, sizeof(buf), "%ld,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", i, p,
                          x, y, z, px, py, pz);
            os << buf;
        }
    }
}

}  // namespace gibbs
