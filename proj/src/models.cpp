#include "gibbs/models.hpp"

#include <cmath>
#include <stdexcept>

#include "gibbs/numerics.hpp"

namespace gibbs {

namespace {

void require_positive_b(double b, const char* who) {
    if (!(b > 0.0)) throw AdmissibilityError(std::string(who) + ": requires b > 0");
}

/// Half-width K sigma with the two-sided 1-d Gaussian tail erfc(K/sqrt 2)
/// below rel_tol.
double gaussian_line_truncation(double sigma, double rel_tol) {
    double lo = 0.0, hi = 1.0;
    while (std::erfc(hi / std::sqrt(2.0)) > rel_tol) hi *= 2.0;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (std::erfc(mid / std::sqrt(2.0)) > rel_tol)
            lo = mid;
        else
            hi = mid;
    }
    return hi * sigma;
}

AdmissibilityResult scalar_positive(const AlgVec& b) {
    if (b[0] > 0.0) return {true, ""};
    return {false, "requires b > 0"};
}

}  // namespace

// ---------------------------------------------------------------------------
// VesselGeometry
// ---------------------------------------------------------------------------

double VesselGeometry::volume() const {
    if (kind == Kind::box)
        return (box_hi.x - box_lo.x) * (box_hi.y - box_lo.y) * (box_hi.z - box_lo.z);
    return M_PI * cyl_radius * cyl_radius * cyl_height;
}

double VesselGeometry::max_point_norm() const {
    if (kind == Kind::box) {
        double best = 0.0;
        for (int i = 0; i < 8; ++i) {
            const Vec3 corner{(i & 1) ? box_hi.x : box_lo.x, (i & 2) ? box_hi.y : box_lo.y,
                              (i & 4) ? box_hi.z : box_lo.z};
            best = std::max(best, corner.norm());
        }
        return best;
    }
    return std::sqrt(cyl_radius * cyl_radius + cyl_height * cyl_height);
}

bool VesselGeometry::contains(const Vec3& r) const {
    if (kind == Kind::box)
        return r.x >= box_lo.x && r.x <= box_hi.x && r.y >= box_lo.y && r.y <= box_hi.y &&
               r.z >= box_lo.z && r.z <= box_hi.z;
    return std::hypot(r.x, r.y) <= cyl_radius && r.z >= 0.0 && r.z <= cyl_height;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

double ideal_gas_log_partition(const IdealGasSpec& spec, double b) {
    require_positive_b(b, "ideal_gas_log_partition");
    double lp = 0.0;
    for (double m : spec.masses)
        lp += std::log(spec.volume) + 1.5 * std::log(2.0 * M_PI * m / b);
    return lp;
}

double ideal_gas_pressure(const IdealGasSpec& spec, double b) {
    require_positive_b(b, "ideal_gas_pressure");
    return static_cast<double>(spec.masses.size()) / (b * spec.volume);
}

double gravity_gas_log_partition(const GravityGasSpec& spec, double b) {
    require_positive_b(b, "gravity_gas_log_partition");
    double lp = 0.0;
    for (double m : spec.masses) {
        const double x = m * spec.gravity * b * spec.height;
        // (1 - e^{-x}) / (m g b) = h (1 - e^{-x}) / x
        lp += std::log(spec.section_area) + 1.5 * std::log(2.0 * M_PI * m / b) +
              std::log(spec.height) + std::log(num::one_minus_exp_over(x));
    }
    return lp;
}

double relativistic_log_partition(const RelativisticGasSpec& spec, double b) {
    require_positive_b(b, "relativistic_log_partition");
    const double c = spec.light_speed;
    double lp = 0.0;
    for (double m : spec.masses)
        lp += std::log(4.0 * M_PI * spec.volume * c / b) + 2.0 * std::log(m) +
              log_bessel_k2(m * b * c * c);
    return lp;
}

double massless_log_partition(double volume, double c, int n, double b) {
    require_positive_b(b, "massless_log_partition");
    if (n < 0) throw std::invalid_argument("massless_log_partition: n >= 0");
    return n * std::log(8.0 * M_PI * volume / (c * c * c * b * b * b));
}

double photon_log_partition(double volume, double c, double b) {
    require_positive_b(b, "photon_log_partition");
    return 16.0 * M_PI * volume / (c * c * c * b * b * b);
}

double photon_number_pmf(double volume, double c, double b, int n) {
    require_positive_b(b, "photon_number_pmf");
    if (n < 0) return 0.0;
    const double lambda = photon_log_partition(volume, c, b);
    return std::exp(n * std::log(lambda) - lambda - std::lgamma(n + 1.0));
}

double solid_log_partition(const SolidSpec& spec, double b) {
    require_positive_b(b, "solid_log_partition");
    if (spec.frequencies.empty())
        throw std::invalid_argument("solid_log_partition: needs at least one oscillator");
    double lp = 0.0;
    for (double nu : spec.frequencies) lp -= std::log(nu);
    return lp - static_cast<double>(spec.frequencies.size()) * std::log(b);
}

double sphere_log_partition(const SphereSpec& spec, const Vec3& b) {
    const double r = spec.radius;
    return std::log(4.0 * M_PI * r * r) + num::log_sinh_over(r * r * b.norm());
}

double sphere_density(const SphereSpec& spec, const Vec3& b, const Vec3& point) {
    const double r = spec.radius;
    if (std::abs(point.norm() - r) > 1e-9 * std::max(1.0, r))
        throw std::invalid_argument("sphere_density: point is not on the sphere");
    return std::exp(r * dot(point, b) - sphere_log_partition(spec, b));
}

// ---------------------------------------------------------------------------
// Moving vessel
// ---------------------------------------------------------------------------

namespace {
void require_nonzero_eps(const GalileanAlgebraElement& b, const char* who) {
    if (b.epsilon == 0.0) throw std::invalid_argument(std::string(who) + ": epsilon must be nonzero");
}
}  // namespace

double frame_potential(const GalileanAlgebraElement& b, const Vec3& r0) {
    require_nonzero_eps(b, "frame_potential");
    const double eps = b.epsilon;
    const Vec3 wxr = cross(b.omega, r0);
    return dot(r0, b.beta) / eps - wxr.norm2() / (2.0 * eps * eps) -
           dot(b.delta / eps, wxr / eps) - b.delta.norm2() / (2.0 * eps * eps);
}

Vec3 drift_velocity(const GalileanAlgebraElement& b, const Vec3& r0) {
    require_nonzero_eps(b, "drift_velocity");
    return (cross(b.omega, r0) + b.delta) / b.epsilon;
}

double vessel_coupling(const VesselSpec& spec, const GalileanAlgebraElement& b, int i,
                       const Vec3& r0, const Vec3& p0) {
    require_nonzero_eps(b, "vessel_coupling");
    const double m = spec.masses.at(i);
    return -b.epsilon * (p0.norm2() / (2.0 * m) + m * frame_potential(b, r0));
}

namespace {

/// Spatial factor int_geometry exp(eps m f(r)) dr by tensor quadrature.
double vessel_spatial_integral(const VesselGeometry& geom, const GalileanAlgebraElement& b,
                               double mass, int nodes) {
    const auto f = [&](std::span<const double> x) {
        const Vec3 r{x[0], x[1], x[2]};
        return std::exp(b.epsilon * mass * frame_potential(b, r));
    };
    Domain d;
    if (geom.kind == VesselGeometry::Kind::box) {
        d = Domain::box_nd({geom.box_lo.x, geom.box_lo.y, geom.box_lo.z},
                           {geom.box_hi.x, geom.box_hi.y, geom.box_hi.z});
    } else {
        d = Domain::cylinder(geom.cyl_radius, geom.cyl_height);
    }
    return gauss_quadrature(d, f, nodes);
}

}  // namespace

double vessel_log_partition(const VesselSpec& spec, const GalileanAlgebraElement& b,
                            int nodes_per_axis) {
    if (!(b.epsilon < 0.0))
        throw AdmissibilityError("vessel_log_partition: requires epsilon < 0");
    double lp = 0.0;
    for (double m : spec.masses) {
        lp += 1.5 * std::log(2.0 * M_PI * m / (-b.epsilon));
        lp += std::log(vessel_spatial_integral(spec.geometry, b, m, nodes_per_axis));
    }
    return lp;
}

namespace {

double centrifuge_exponent(const VesselSpec& spec, const GalileanAlgebraElement& b, int i) {
    if (spec.geometry.kind != VesselGeometry::Kind::cylinder)
        throw std::invalid_argument("centrifuge: cylinder geometry required");
    if (!(b.epsilon < 0.0)) throw AdmissibilityError("centrifuge: requires epsilon < 0");
    if (b.beta.norm() != 0.0 || b.delta.norm() != 0.0 ||
        std::hypot(b.omega.x, b.omega.y) != 0.0)
        throw std::invalid_argument("centrifuge: needs omega along e_z, beta = delta = 0");
    const double m = spec.masses.at(i);
    const double w = b.omega.z;
    return m * w * w / (-2.0 * b.epsilon);  // density(D) ~ D exp(a D^2)
}

}  // namespace

double centrifuge_radial_density(const VesselSpec& spec, const GalileanAlgebraElement& b,
                                 int i, double delta_radius) {
    const double a = centrifuge_exponent(spec, b, i);
    const double rc = spec.geometry.cyl_radius;
    if (delta_radius < 0.0 || delta_radius > rc)
        throw std::invalid_argument("centrifuge_radial_density: radius outside the cylinder");
    // int_0^Rc D exp(a D^2) dD = (exp(a Rc^2) - 1) / (2a), Rc^2/2 at a = 0.
    const double norm = 0.5 * rc * rc * num::expm1_over(a * rc * rc);
    return delta_radius * std::exp(a * delta_radius * delta_radius) / norm;
}

double centrifuge_mean_radius(const VesselSpec& spec, const GalileanAlgebraElement& b, int i) {
    const double rc = spec.geometry.cyl_radius;
    const auto f = [&](double d) { return d * centrifuge_radial_density(spec, b, i, d); };
    return num::adaptive_gauss(f, 0.0, rc, 1e-12, 32, 256);
}

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

ThermoModel make_ideal_gas_model(const IdealGasSpec& spec) {
    if (!(spec.volume > 0.0)) throw std::invalid_argument("ideal gas: volume > 0");
    for (double m : spec.masses)
        if (!(m > 0.0)) throw std::invalid_argument("ideal gas: masses > 0");

    const int n = static_cast<int>(spec.masses.size());
    ThermoModel model;
    model.name = "ideal_gas";
    model.kind = ModelKind::ideal_gas;
    model.dim_b = 1;
    model.n_particles = n;
    model.spec = spec;
    model.admissible = scalar_positive;

    model.coupling = [spec](std::span<const double> z, const AlgVec& b) {
        double h = 0.0;
        for (size_t i = 0; i < spec.masses.size(); ++i) {
            const double* p = z.data() + 6 * i + 3;
            h += (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) / (2.0 * spec.masses[i]);
        }
        return b[0] * h;
    };
    model.momentum = [coupling = model.coupling](std::span<const double> z) {
        return AlgVec{coupling(z, {1.0})};
    };
    model.domain_for = [spec, n](const AlgVec& b) {
        double m_max = 0.0;
        for (double m : spec.masses) m_max = std::max(m_max, m);
        double tail = 0.0;
        const double radius =
            gaussian_ball_truncation(std::sqrt(m_max / b[0]), 1e-12 / (2.0 * n), &tail);
        const double side = std::cbrt(spec.volume);
        return Domain::box_nd({0.0, 0.0, 0.0}, {side, side, side}, n, radius, n * tail);
    };
    model.closed_form_log_partition = [spec](const AlgVec& b) {
        return ideal_gas_log_partition(spec, b[0]);
    };
    model.closed_form_mean = [n](const AlgVec& b) {
        require_positive_b(b[0], "ideal gas mean");
        return AlgVec{1.5 * n / b[0]};
    };
    return model;
}

ThermoModel make_gravity_gas_model(const GravityGasSpec& spec) {
    if (!(spec.section_area > 0.0 && spec.height > 0.0 && spec.gravity > 0.0))
        throw std::invalid_argument("gravity gas: extents and gravity must be positive");
    for (double m : spec.masses)
        if (!(m > 0.0)) throw std::invalid_argument("gravity gas: masses > 0");

    const int n = static_cast<int>(spec.masses.size());
    ThermoModel model;
    model.name = "gravity_gas";
    model.kind = ModelKind::gravity_gas;
    model.dim_b = 1;
    model.n_particles = n;
    model.spec = spec;
    model.admissible = scalar_positive;

    model.coupling = [spec](std::span<const double> z, const AlgVec& b) {
        double h = 0.0;
        for (size_t i = 0; i < spec.masses.size(); ++i) {
            const double* q = z.data() + 6 * i;
            const double* p = q + 3;
            h += (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) / (2.0 * spec.masses[i]) +
                 spec.masses[i] * spec.gravity * q[2];
        }
        return b[0] * h;
    };
    model.momentum = [coupling = model.coupling](std::span<const double> z) {
        return AlgVec{coupling(z, {1.0})};
    };
    model.domain_for = [spec, n](const AlgVec& b) {
        double m_max = 0.0;
        for (double m : spec.masses) m_max = std::max(m_max, m);
        double tail = 0.0;
        const double radius =
            gaussian_ball_truncation(std::sqrt(m_max / b[0]), 1e-12 / (2.0 * n), &tail);
        const double side = std::sqrt(spec.section_area);
        return Domain::box_nd({0.0, 0.0, 0.0}, {side, side, spec.height}, n, radius, n * tail);
    };
    model.closed_form_log_partition = [spec](const AlgVec& b) {
        return gravity_gas_log_partition(spec, b[0]);
    };
    model.closed_form_mean = [spec](const AlgVec& b) {
        require_positive_b(b[0], "gravity gas mean");
        double e = 0.0;
        for (double m : spec.masses) {
            const double x = m * spec.gravity * b[0] * spec.height;
            e += 2.5 / b[0] - m * spec.gravity * spec.height / std::expm1(x);
        }
        return AlgVec{e};
    };
    return model;
}

ThermoModel make_relativistic_gas_model(const RelativisticGasSpec& spec) {
    if (!(spec.volume > 0.0 && spec.light_speed > 0.0))
        throw std::invalid_argument("relativistic gas: volume and c must be positive");
    for (double m : spec.masses)
        if (!(m > 0.0)) throw std::invalid_argument("relativistic gas: masses > 0");

    const int n = static_cast<int>(spec.masses.size());
    ThermoModel model;
    model.name = "relativistic_gas";
    model.kind = ModelKind::relativistic_gas;
    model.dim_b = 1;
    model.n_particles = n;
    model.spec = spec;
    model.admissible = scalar_positive;

    const double c = spec.light_speed;
    model.coupling = [spec, c](std::span<const double> z, const AlgVec& b) {
        double h = 0.0;
        for (size_t i = 0; i < spec.masses.size(); ++i) {
            const double* p = z.data() + 6 * i + 3;
            const double mc = spec.masses[i] * c;
            h += c * std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + mc * mc);
        }
        return b[0] * h;
    };
    model.momentum = [coupling = model.coupling](std::span<const double> z) {
        return AlgVec{coupling(z, {1.0})};
    };
    model.domain_for = [spec, c, n](const AlgVec& b) {
        // The true momentum law is bounded by the massless one; the tail
        // fraction bound carries a factor exp(m b c^2).
        double m_max = 0.0;
        for (double m : spec.masses) m_max = std::max(m_max, m);
        const double rel = 1e-12 * std::exp(-m_max * b[0] * c * c) / (2.0 * n);
        double tail = 0.0;
        const double radius = exponential_ball_truncation(b[0] * c, rel, &tail);
        const double side = std::cbrt(spec.volume);
        return Domain::box_nd({0.0, 0.0, 0.0}, {side, side, side}, n, radius,
                              n * tail * std::exp(m_max * b[0] * c * c));
    };
    model.closed_form_log_partition = [spec](const AlgVec& b) {
        return relativistic_log_partition(spec, b[0]);
    };
    return model;
}

ThermoModel make_massless_gas_model(const MasslessGasSpec& spec) {
    if (!(spec.volume > 0.0 && spec.light_speed > 0.0 && spec.n_particles >= 0))
        throw std::invalid_argument("massless gas: bad spec");

    ThermoModel model;
    model.name = "massless_gas";
    model.kind = ModelKind::massless_gas;
    model.dim_b = 1;
    model.n_particles = spec.n_particles;
    model.spec = spec;
    model.admissible = scalar_positive;

    const double c = spec.light_speed;
    const int n = spec.n_particles;
    model.coupling = [n, c](std::span<const double> z, const AlgVec& b) {
        double h = 0.0;
        for (int i = 0; i < n; ++i) {
            const double* p = z.data() + 6 * i + 3;
            h += c * std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        }
        return b[0] * h;
    };
    model.momentum = [coupling = model.coupling](std::span<const double> z) {
        return AlgVec{coupling(z, {1.0})};
    };
    if (n > 0) {
        model.domain_for = [spec, c, n](const AlgVec& b) {
            double tail = 0.0;
            const double radius =
                exponential_ball_truncation(b[0] * c, 1e-12 / (2.0 * n), &tail);
            const double side = std::cbrt(spec.volume);
            return Domain::box_nd({0.0, 0.0, 0.0}, {side, side, side}, n, radius, n * tail);
        };
    }
    model.closed_form_log_partition = [spec](const AlgVec& b) {
        return massless_log_partition(spec.volume, spec.light_speed, spec.n_particles, b[0]);
    };
    model.closed_form_mean = [n](const AlgVec& b) {
        require_positive_b(b[0], "massless gas mean");
        return AlgVec{3.0 * n / b[0]};
    };
    return model;
}

ThermoModel make_photon_gas_model(const PhotonGasSpec& spec) {
    if (!(spec.volume > 0.0 && spec.light_speed > 0.0))
        throw std::invalid_argument("photon gas: volume and c must be positive");

    ThermoModel model;
    model.name = "photon_gas";
    model.kind = ModelKind::photon_gas;
    model.dim_b = 1;
    model.n_particles = 1;
    model.spec = spec;
    model.admissible = scalar_positive;
    // Variable photon number: no finite-dimensional domain, closed forms only.
    model.closed_form_log_partition = [spec](const AlgVec& b) {
        return photon_log_partition(spec.volume, spec.light_speed, b[0]);
    };
    model.closed_form_mean = [spec](const AlgVec& b) {
        require_positive_b(b[0], "photon gas mean");
        const double c = spec.light_speed;
        return AlgVec{48.0 * M_PI * spec.volume / (c * c * c * b[0] * b[0] * b[0] * b[0])};
    };
    return model;
}

ThermoModel make_solid_model(const SolidSpec& spec) {
    for (double nu : spec.frequencies)
        if (!(nu > 0.0)) throw std::invalid_argument("solid: frequencies > 0");
    const int l = static_cast<int>(spec.frequencies.size());
    if (l == 0) throw std::invalid_argument("solid: needs at least one oscillator");

    ThermoModel model;
    model.name = "solid";
    model.kind = ModelKind::solid;
    model.dim_b = 1;
    model.n_particles = std::max(1, l / 3);
    model.spec = spec;
    model.admissible = scalar_positive;

    // Oscillator i has unit mass and stiffness (2 pi nu_i)^2; the phase point
    // is flattened as (p_1, q_1, ..., p_L, q_L).
    model.coupling = [spec, l](std::span<const double> z, const AlgVec& b) {
        double h = 0.0;
        for (int i = 0; i < l; ++i) {
            const double p = z[2 * i], q = z[2 * i + 1];
            const double mu = std::pow(2.0 * M_PI * spec.frequencies[i], 2);
            h += 0.5 * p * p + 0.5 * mu * q * q;
        }
        return b[0] * h;
    };
    model.momentum = [coupling = model.coupling](std::span<const double> z) {
        return AlgVec{coupling(z, {1.0})};
    };
    model.domain_for = [spec, l](const AlgVec& b) {
        std::vector<double> lo(2 * l), hi(2 * l);
        for (int i = 0; i < l; ++i) {
            const double mu = std::pow(2.0 * M_PI * spec.frequencies[i], 2);
            const double pw = gaussian_line_truncation(std::sqrt(1.0 / b[0]), 1e-12 / (4.0 * l));
            const double qw =
                gaussian_line_truncation(std::sqrt(1.0 / (mu * b[0])), 1e-12 / (4.0 * l));
            lo[2 * i] = -pw;
            hi[2 * i] = pw;
            lo[2 * i + 1] = -qw;
            hi[2 * i + 1] = qw;
        }
        Domain d = Domain::box_nd(std::move(lo), std::move(hi));
        d.tail_bound = 1e-12;
        return d;
    };
    model.closed_form_log_partition = [spec](const AlgVec& b) {
        return solid_log_partition(spec, b[0]);
    };
    model.closed_form_mean = [l](const AlgVec& b) {
        require_positive_b(b[0], "solid mean");
        return AlgVec{static_cast<double>(l) / b[0]};
    };
    return model;
}

ThermoModel make_sphere_model(const SphereSpec& spec) {
    if (!(spec.radius > 0.0)) throw std::invalid_argument("sphere: radius > 0");
    const double r = spec.radius;

    ThermoModel model;
    model.name = "sphere";
    model.kind = ModelKind::sphere;
    model.dim_b = 3;
    model.n_particles = 1;
    model.spec = spec;
    // Compact phase space: every b is admissible.
    model.admissible = [](const AlgVec&) { return AdmissibilityResult{true, ""}; };

    model.coupling = [r](std::span<const double> z, const AlgVec& b) {
        return -r * (z[0] * b[0] + z[1] * b[1] + z[2] * b[2]);
    };
    model.momentum = [r](std::span<const double> z) {
        return AlgVec{-r * z[0], -r * z[1], -r * z[2]};
    };
    model.domain_for = [r](const AlgVec&) { return Domain::sphere_surface(r); };
    model.closed_form_log_partition = [spec](const AlgVec& b) {
        return sphere_log_partition(spec, vec3_from_alg(b));
    };
    model.closed_form_mean = [r](const AlgVec& b) {
        const Vec3 bv = vec3_from_alg(b);
        const double nb = bv.norm();
        if (nb == 0.0) return AlgVec{0.0, 0.0, 0.0};
        const Vec3 mean = (-r * r * num::coth_minus_inv(r * r * nb) / nb) * bv;
        return to_alg(mean);
    };
    model.cocycle_theta = [](const AlgVec&) { return AlgVec{0.0, 0.0, 0.0}; };
    model.bracket = [](const AlgVec& x, const AlgVec& y) {
        return to_alg(cross(vec3_from_alg(x), vec3_from_alg(y)));
    };
    model.ad_star = [](const AlgVec& x, const AlgVec& xi) {
        return to_alg(coadjoint_star(vec3_from_alg(x), vec3_from_alg(xi)));
    };
    return model;
}

ThermoModel make_vessel_model(const VesselSpec& spec) {
    if (!(spec.geometry.volume() > 0.0)) throw std::invalid_argument("vessel: empty geometry");
    for (double m : spec.masses)
        if (!(m > 0.0)) throw std::invalid_argument("vessel: masses > 0");
    const int n = static_cast<int>(spec.masses.size());

    ThermoModel model;
    model.name = "vessel";
    model.kind = ModelKind::vessel;
    model.dim_b = 10;
    model.n_particles = n;
    model.spec = spec;
    model.admissible = [](const AlgVec& b) {
        if (b[9] < 0.0) return AdmissibilityResult{true, ""};
        return AdmissibilityResult{false, "requires epsilon < 0"};
    };

    model.coupling = [spec](std::span<const double> z, const AlgVec& b) {
        const GalileanAlgebraElement x = galilean_from_alg(b);
        double total = 0.0;
        for (size_t i = 0; i < spec.masses.size(); ++i) {
            const double* q = z.data() + 6 * i;
            total += vessel_coupling(spec, x, static_cast<int>(i), {q[0], q[1], q[2]},
                                     {q[3], q[4], q[5]});
        }
        return total;
    };
    model.domain_for = [spec, n](const AlgVec& b) {
        const double eps = b[9];
        double m_max = 0.0;
        for (double m : spec.masses) m_max = std::max(m_max, m);
        double tail = 0.0;
        const double radius =
            gaussian_ball_truncation(std::sqrt(m_max / (-eps)), 1e-12 / (2.0 * n), &tail);
        if (spec.geometry.kind == VesselGeometry::Kind::box) {
            return Domain::box_nd(
                {spec.geometry.box_lo.x, spec.geometry.box_lo.y, spec.geometry.box_lo.z},
                {spec.geometry.box_hi.x, spec.geometry.box_hi.y, spec.geometry.box_hi.z}, n,
                radius, n * tail);
        }
        return Domain::cylinder(spec.geometry.cyl_radius, spec.geometry.cyl_height, n, radius,
                                n * tail);
    };
    model.closed_form_log_partition = [spec](const AlgVec& b) {
        return vessel_log_partition(spec, galilean_from_alg(b));
    };
    return model;
}

}  // namespace gibbs
