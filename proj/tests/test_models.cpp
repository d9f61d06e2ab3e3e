#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gibbs/models.hpp"
#include "gibbs/numerics.hpp"
#include "gibbs/oracle.hpp"
#include "gibbs/thermo.hpp"
#include "test_util.hpp"

using namespace gibbs;

TEST_CASE("ideal gas closed form") {
    const IdealGasSpec unit{1.0, {1.0}};
    CHECK(ideal_gas_log_partition(unit, 2.0 * M_PI) == doctest::Approx(0.0).epsilon(1e-15));

    const IdealGasSpec spec{3.0, {2.0}};
    const double b = 1.0;
    const double expect = std::log(3.0) + 1.5 * std::log(2.0 * M_PI * 2.0);
    CHECK(ideal_gas_log_partition(spec, b) == doctest::Approx(expect).epsilon(1e-15));

    CHECK_THROWS_AS(ideal_gas_log_partition(unit, 0.0), AdmissibilityError);
    CHECK_THROWS_AS(ideal_gas_log_partition(unit, -1.0), AdmissibilityError);
}

TEST_CASE("ideal gas closed form matches the MC oracle") {
    const IdealGasSpec spec{3.0, {2.0}};
    const ThermoModel model = make_ideal_gas_model(spec);
    const Estimate est = log_partition_estimate(model, {1.0}, {200000, 71});
    const double closed = std::exp(ideal_gas_log_partition(spec, 1.0));
    CHECK(std::abs(est.value - closed) <= 3.0 * est.std_error);
}

TEST_CASE("ideal gas pressure and equation of state") {
    const IdealGasSpec spec{1.0, {1.0}};
    CHECK(ideal_gas_pressure(spec, 1.0) == doctest::Approx(1.0).epsilon(1e-15));

    // Pi V b = N identically.
    const IdealGasSpec gas{2.5, {1.0, 2.0, 3.0}};
    for (double b = 0.5; b <= 5.0; b += 0.5)
        CHECK(ideal_gas_pressure(gas, b) * gas.volume * b ==
              doctest::Approx(3.0).epsilon(1e-14));

    // Doubling the volume at fixed b halves the pressure.
    IdealGasSpec doubled = gas;
    doubled.volume *= 2.0;
    CHECK(ideal_gas_pressure(doubled, 1.3) ==
          doctest::Approx(0.5 * ideal_gas_pressure(gas, 1.3)).epsilon(1e-15));
}

TEST_CASE("gravity column reduces to the ideal gas as g -> 0") {
    GravityGasSpec spec;
    spec.section_area = 2.0;
    spec.height = 1.0;
    spec.gravity = 1e-8;
    spec.masses = {1.0, 1.3};
    const IdealGasSpec flat{spec.section_area * spec.height, spec.masses};
    for (double b : {0.5, 1.0}) {
        const double lg = gravity_gas_log_partition(spec, b);
        const double li = ideal_gas_log_partition(flat, b);
        CHECK(std::abs(lg - li) <= 1e-8 * std::abs(li));
    }
    // Away from the limit the leading deviation is -x/2 per particle,
    // x = m g b h.
    spec.gravity = 1e-4;
    const double lg = gravity_gas_log_partition(spec, 1.0);
    const double li = ideal_gas_log_partition(flat, 1.0);
    const double x_sum = (1.0 + 1.3) * spec.gravity;
    CHECK(lg - li == doctest::Approx(-0.5 * x_sum).epsilon(1e-4));
}

TEST_CASE("gravity column matches the MC oracle") {
    GravityGasSpec spec;
    spec.section_area = 1.0;
    spec.height = 1.0;
    spec.gravity = 1.0;
    spec.masses = {1.0};
    const ThermoModel model = make_gravity_gas_model(spec);
    const Estimate est = log_partition_estimate(model, {1.0}, {200000, 81});
    const double closed = std::exp(gravity_gas_log_partition(spec, 1.0));
    CHECK(std::abs(est.value - closed) <= 3.0 * est.std_error);
}

TEST_CASE("gravity altitude marginal is exponential") {
    // Sampled through the vessel state with beta = g eps e_z.
    GravityGasSpec spec;
    spec.section_area = 1.0;
    spec.height = 1.0;
    spec.gravity = 1.0;
    spec.masses = {1.5};
    const double b = 1.2;

    VesselSpec vessel;
    vessel.geometry.kind = VesselGeometry::Kind::box;
    vessel.geometry.box_lo = {0.0, 0.0, 0.0};
    vessel.geometry.box_hi = {1.0, 1.0, spec.height};
    vessel.masses = spec.masses;
    GalileanAlgebraElement gen;
    gen.epsilon = -b;
    gen.beta = {0.0, 0.0, spec.gravity * gen.epsilon};

    const SampleBatch batch = sample_vessel(vessel, gen, 100000, 67);
    const auto project = [](std::span<const double> z) { return z[2]; };
    const double mgb = spec.masses[0] * spec.gravity * b;
    const auto density = [mgb](double z) { return std::exp(-mgb * z); };
    const GofResult res = gof_statistic(batch, project, density, 20, 0.0, spec.height);
    CHECK(res.p_value > 0.01);

    // The momentum marginal is unchanged by gravity: variance m/b.
    double sum = 0.0, sum2 = 0.0;
    for (long i = 0; i < batch.n_samples; ++i) {
        const double pz = batch.coord(i, 0, 5);
        sum += pz;
        sum2 += pz * pz;
    }
    const long n = batch.n_samples;
    const double var = sum2 / n - (sum / n) * (sum / n);
    const double expect = spec.masses[0] / b;
    CHECK(std::abs(var - expect) <= 3.0 * expect * std::sqrt(2.0 / n));
}

TEST_CASE("gravity analytic mean matches finite differences") {
    GravityGasSpec spec;
    spec.section_area = 1.5;
    spec.height = 2.0;
    spec.gravity = 0.7;
    spec.masses = {1.0, 3.0};
    const ThermoModel model = make_gravity_gas_model(spec);
    for (double b : {0.4, 1.0, 2.7}) {
        const double analytic = model.closed_form_mean({b})[0];
        const auto f = [&](double t) { return gravity_gas_log_partition(spec, t); };
        const double fd = -num::derivative(f, b, 1e-5 * b);
        CHECK(std::abs(analytic - fd) <= 1e-8 * std::abs(analytic));
    }
}

TEST_CASE("relativistic gas recovers the massless form as m b c^2 -> 0") {
    const double b = 1.0, c = 1.0, v = 1.0;
    const double m = 1e-3;  // x = m b c^2 = 1e-3
    const RelativisticGasSpec spec{v, c, {m}};
    const double lp = relativistic_log_partition(spec, b);
    const double massless = massless_log_partition(v, c, 1, b);
    CHECK(std::abs(lp - massless) <= 1e-6 * std::abs(massless));
}

TEST_CASE("relativistic mean energy approaches mc^2 + 3/(2b) for heavy particles") {
    const double c = 1.0, b = 1.0, m = 100.0;  // m b c^2 = 100
    const RelativisticGasSpec spec{1.0, c, {m}};
    const auto f = [&](double t) { return relativistic_log_partition(spec, t); };
    const double energy = -num::derivative(f, b, 1e-6);
    const double expect = m * c * c + 1.5 / b;
    CHECK(std::abs(energy - expect) <= 0.005 * expect);
}

TEST_CASE("relativistic closed form matches importance sampling on the massless law") {
    const double m = 1.0, c = 1.0, b = 1.0, v = 1.0;
    const RelativisticGasSpec spec{v, c, {m}};
    const long n = 200000;

    // P = V (8 pi / (bc)^3) E_q[exp(-bc (sqrt(p^2 + m^2 c^2) - p))] under the
    // massless proposal q.
    double mean = 0.0, m2 = 0.0;
    for (long i = 0; i < n; ++i) {
        CounterRng rng(split_seed(1234, i));
        const double p = rng.gamma3(1.0 / (b * c));
        const double w = std::exp(-b * c * (std::sqrt(p * p + m * m * c * c) - p));
        const double d = w - mean;
        mean += d / (i + 1);
        m2 += d * (w - mean);
    }
    const double base = v * 8.0 * M_PI / std::pow(b * c, 3);
    const double est = base * mean;
    const double se = base * std::sqrt(m2 / (n - 1) / n);
    const double closed = std::exp(relativistic_log_partition(spec, b));
    CHECK(std::abs(est - closed) <= 3.0 * se);
}

TEST_CASE("massless gas closed form") {
    CHECK(massless_log_partition(1.0, 1.0, 0, 2.0) == 0.0);
    const ThermoModel model = make_massless_gas_model({1.0, 1.0, 2});
    CHECK(mean_energy(model, 1.5) == doctest::Approx(6.0 / 1.5).epsilon(1e-14));

    // Uniform-ball MC cross-check at n = 1 particle.
    const ThermoModel one = make_massless_gas_model({1.0, 1.0, 1});
    const Estimate est = log_partition_estimate(one, {1.0}, {200000, 91});
    const double closed = std::exp(massless_log_partition(1.0, 1.0, 1, 1.0));
    CHECK(std::abs(est.value - closed) <= 3.0 * est.std_error);

    CHECK_THROWS_AS(massless_log_partition(1.0, 1.0, 1, 0.0), AdmissibilityError);
}

TEST_CASE("photon number law is a normalized poisson with mean lambda") {
    const double v = 1.0, c = 1.0, b = 1.0;
    const double lambda = photon_log_partition(v, c, b);
    const int terms = static_cast<int>(10.0 * lambda) + 50;

    double total = 0.0, mean = 0.0, second = 0.0;
    for (int n = 0; n <= terms; ++n) {
        const double p = photon_number_pmf(v, c, b, n);
        total += p;
        mean += n * p;
        second += static_cast<double>(n) * n * p;
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(std::abs(mean - lambda) < 1e-10);
    CHECK(std::abs((second - mean * mean) - lambda) < 1e-10);
}

TEST_CASE("photon energy matches the finite difference of log P") {
    const double v = 2.0, c = 1.5;
    const ThermoModel model = make_photon_gas_model({v, c});
    for (double b : {0.5, 1.0, 3.0}) {
        const double analytic = mean_energy(model, b);
        const auto f = [&](double t) { return photon_log_partition(v, c, t); };
        const double fd = -num::derivative(f, b, 1e-5 * b);
        CHECK(std::abs(analytic - fd) <= 1e-7 * std::abs(analytic));
        CHECK(analytic ==
              doctest::Approx(48.0 * M_PI * v / (std::pow(c, 3) * std::pow(b, 4))));
    }
}

TEST_CASE("solid energy is frequency-independent (Dulong-Petit)") {
    const ThermoModel a = make_solid_model({{1.0, 1.0, 1.0}});
    const ThermoModel b = make_solid_model({{2.0, 5.0, 9.0}});
    for (double bb : {0.3, 1.0, 7.0}) {
        const double ea = mean_energy(a, bb);
        const double eb = mean_energy(b, bb);
        CHECK(std::abs(ea - eb) <= 1e-12 * std::abs(ea));
        CHECK(ea == doctest::Approx(3.0 / bb).epsilon(1e-14));
    }

    // Heat capacity -b^2 dE/db = 3N, constant in b.
    for (double bb : {0.5, 2.0}) {
        const auto e = [&](double t) { return mean_energy(a, t); };
        const double cap = -bb * bb * num::derivative(e, bb, 1e-5 * bb);
        CHECK(cap == doctest::Approx(3.0).epsilon(1e-6));
    }
}

TEST_CASE("single oscillator partition agrees with 2-d quadrature") {
    const double nu = 1.0 / (2.0 * M_PI);  // unit mass, unit stiffness
    const SolidSpec spec{{nu}};
    const double b = 1.0;
    const Domain pq = Domain::box_nd({-9.0, -9.0}, {9.0, 9.0});
    const double integral = gauss_quadrature(
        pq, [b](std::span<const double> z) { return std::exp(-0.5 * b * (z[0] * z[0] + z[1] * z[1])); },
        64);
    CHECK(std::abs(solid_log_partition(spec, b) - std::log(integral)) <= 1e-8);
}

TEST_CASE("sphere partition function") {
    const SphereSpec spec{1.0};
    CHECK(sphere_log_partition(spec, Vec3::zero()) ==
          doctest::Approx(std::log(4.0 * M_PI)).epsilon(1e-15));

    // At R = 1 the form coincides with 4 pi R sinh(R|b|)/|b|.
    for (double nb : {0.5, 1.0, 3.0}) {
        const Vec3 b{0.0, 0.0, nb};
        const double printed = std::log(4.0 * M_PI * std::sinh(nb) / nb);
        CHECK(sphere_log_partition(spec, b) == doctest::Approx(printed).epsilon(1e-13));
    }

    // Tiny |b| falls back to the series smoothly.
    const SphereSpec big{2.0};
    CHECK(sphere_log_partition(big, {1e-12, 0.0, 0.0}) ==
          doctest::Approx(std::log(4.0 * M_PI * 4.0)).epsilon(1e-12));
}

TEST_CASE("sphere density peaks along b and dips at the antipode") {
    const SphereSpec spec{1.3};
    const Vec3 b{0.4, -0.2, 1.0};
    const Vec3 top = spec.radius * normalized(b);
    const double peak = sphere_density(spec, b, top);
    const double dip = sphere_density(spec, b, -top);
    CHECK(peak > dip);
    CounterRng rng(5150);
    for (int i = 0; i < 200; ++i) {
        const Vec3 om = spec.radius * rng.isotropic();
        const double rho = sphere_density(spec, b, om);
        CHECK(rho <= peak * (1.0 + 1e-12));
        CHECK(rho >= dip * (1.0 - 1e-12));
    }
    CHECK_THROWS_AS(sphere_density(spec, b, {100.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("sphere closed form matches the MC oracle") {
    const SphereSpec spec{1.0};
    const ThermoModel model = make_sphere_model(spec);
    const AlgVec b{0.0, 0.0, 2.0};
    const Estimate est = log_partition_estimate(model, b, {200000, 13});
    const double closed = std::exp(sphere_log_partition(spec, {0.0, 0.0, 2.0}));
    CHECK(std::abs(est.value - closed) <= 3.0 * est.std_error);
}

// ---------------------------------------------------------------------------
// Moving vessel
// ---------------------------------------------------------------------------

namespace {

VesselSpec unit_box_vessel(std::vector<double> masses) {
    VesselSpec spec;
    spec.geometry.kind = VesselGeometry::Kind::box;
    spec.geometry.box_lo = {0.0, 0.0, 0.0};
    spec.geometry.box_hi = {1.0, 1.0, 1.0};
    spec.masses = std::move(masses);
    return spec;
}

}  // namespace

TEST_CASE("vessel coupling agrees with the free-particle pairing") {
    // <J_i(r0, 0, v0, m), b> with v0 = p0/m + U*(r0) must reproduce the
    // coupling expressed through the frame potential.
    CounterRng rng(606);
    const VesselSpec spec = unit_box_vessel({1.7});
    for (int rep = 0; rep < 50; ++rep) {
        GalileanAlgebraElement b;
        b.omega = test::random_vec3(rng);
        b.beta = test::random_vec3(rng);
        b.delta = test::random_vec3(rng);
        b.epsilon = -(0.2 + rng.uniform());
        const Vec3 r0 = test::random_vec3(rng, 0.5);
        const Vec3 p0 = test::random_vec3(rng, 2.0);
        const double m = spec.masses[0];

        const Vec3 v0 = p0 / m + drift_velocity(b, r0);
        const double via_pairing = galilean_pairing(free_particle_momentum(r0, v0, 0.0, m), b);
        const double via_frame = vessel_coupling(spec, b, 0, r0, p0);
        CHECK(std::abs(via_pairing - via_frame) <= 1e-12 * std::max(1.0, std::abs(via_frame)));
    }
}

TEST_CASE("inertial translation: the vessel state is the co-moving ideal gas") {
    const VesselSpec spec = unit_box_vessel({1.0, 2.0});
    GalileanAlgebraElement b;
    b.delta = {0.5, -0.25, 1.0};
    b.epsilon = -2.0;

    // f is the constant -|delta|^2 / (2 eps^2).
    const double f_const = -b.delta.norm2() / (2.0 * b.epsilon * b.epsilon);
    CHECK(frame_potential(b, {0.3, 0.9, 0.1}) == doctest::Approx(f_const).epsilon(1e-15));

    const IdealGasSpec gas{1.0, spec.masses};
    const double expect = ideal_gas_log_partition(gas, -b.epsilon) +
                          b.epsilon * (spec.masses[0] + spec.masses[1]) * f_const;
    CHECK(vessel_log_partition(spec, b) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("uniform acceleration: the vessel state is the gravity column") {
    GravityGasSpec gas;
    gas.section_area = 1.0;
    gas.height = 1.0;
    gas.gravity = 1.4;
    gas.masses = {1.0, 3.0};

    const VesselSpec spec = unit_box_vessel(gas.masses);
    GalileanAlgebraElement b;
    b.epsilon = -0.8;
    b.beta = {0.0, 0.0, gas.gravity * b.epsilon};  // field g = -beta/eps downward

    CHECK(frame_potential(b, {0.2, 0.7, 0.4}) ==
          doctest::Approx(0.4 * gas.gravity).epsilon(1e-13));
    CHECK(vessel_log_partition(spec, b) ==
          doctest::Approx(gravity_gas_log_partition(gas, -b.epsilon)).epsilon(1e-10));
}

TEST_CASE("rotation: frame potential is the centrifugal well") {
    GalileanAlgebraElement b;
    b.omega = {0.0, 0.0, 2.0};
    b.epsilon = -1.0;
    const Vec3 r0{0.3, -0.4, 0.9};
    const double planar2 = 0.3 * 0.3 + 0.4 * 0.4;
    CHECK(frame_potential(b, r0) ==
          doctest::Approx(-0.5 * 4.0 * planar2 / (b.epsilon * b.epsilon)).epsilon(1e-14));
}

TEST_CASE("centrifuge radial density: normalization, flat limit, mass ordering") {
    VesselSpec spec;
    spec.geometry.kind = VesselGeometry::Kind::cylinder;
    spec.geometry.cyl_radius = 1.0;
    spec.geometry.cyl_height = 1.0;
    spec.masses = {1.0, 2.0, 4.0};
    GalileanAlgebraElement b;
    b.omega = {0.0, 0.0, 1.5};
    b.epsilon = -1.0;

    for (int i = 0; i < 3; ++i) {
        const auto density = [&](double d) { return centrifuge_radial_density(spec, b, i, d); };
        const double mass = num::adaptive_gauss(density, 0.0, 1.0, 1e-12);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-11));
    }

    // omega = 0 degenerates to the uniform-over-disk marginal ~ D.
    GalileanAlgebraElement still;
    still.epsilon = -1.0;
    CHECK(centrifuge_radial_density(spec, still, 0, 0.5) == doctest::Approx(1.0).epsilon(1e-12));

    // Heavier particles sit farther out.
    const double r0 = centrifuge_mean_radius(spec, b, 0);
    const double r1 = centrifuge_mean_radius(spec, b, 1);
    const double r2 = centrifuge_mean_radius(spec, b, 2);
    CHECK(r0 < r1);
    CHECK(r1 < r2);

    CHECK_THROWS_AS(centrifuge_radial_density(spec, b, 0, 2.0), std::invalid_argument);
    GalileanAlgebraElement tilted = b;
    tilted.omega = {0.4, 0.0, 1.0};
    CHECK_THROWS_AS(centrifuge_radial_density(spec, tilted, 0, 0.5), std::invalid_argument);
}

TEST_CASE("vessel closed form matches the MC oracle") {
    VesselSpec spec;
    spec.geometry.kind = VesselGeometry::Kind::cylinder;
    spec.geometry.cyl_radius = 1.0;
    spec.geometry.cyl_height = 1.0;
    spec.masses = {1.0};
    const ThermoModel model = make_vessel_model(spec);

    GalileanAlgebraElement b;
    b.omega = {0.0, 0.0, 1.0};
    b.beta = {0.1, 0.0, -0.3};
    b.delta = {0.0, 0.2, 0.0};
    b.epsilon = -1.5;

    const Estimate est = log_partition_estimate(model, to_alg(b), {200000, 29});
    const double closed = std::exp(vessel_log_partition(spec, b));
    CHECK(std::abs(est.value - closed) <= 3.0 * est.std_error);
}

TEST_CASE("vessel rejects degenerate generators") {
    const VesselSpec spec = unit_box_vessel({1.0});
    GalileanAlgebraElement flat;
    flat.epsilon = 0.0;
    CHECK_THROWS_AS(frame_potential(flat, Vec3::zero()), std::invalid_argument);
    CHECK_THROWS_AS(drift_velocity(flat, Vec3::zero()), std::invalid_argument);
    CHECK_THROWS_AS(vessel_coupling(spec, flat, 0, Vec3::zero(), Vec3::zero()),
                    std::invalid_argument);
    GalileanAlgebraElement hot;
    hot.epsilon = 0.5;
    CHECK_THROWS_AS(vessel_log_partition(spec, hot), AdmissibilityError);
}

TEST_CASE("every closed form agrees with the MC oracle at two parameter points") {
    struct Case {
        ThermoModel model;
        AlgVec b1, b2;
    };
    std::vector<Case> cases;
    cases.push_back({make_ideal_gas_model({1.0, {1.0}}), {0.5}, {2.0}});
    cases.push_back({make_gravity_gas_model({1.0, 1.0, 1.0, {1.0}}), {0.7}, {1.6}});
    cases.push_back({make_relativistic_gas_model({1.0, 1.0, {1.0}}), {0.8}, {1.25}});
    cases.push_back({make_massless_gas_model({1.0, 1.0, 1}), {0.8}, {1.5}});
    cases.push_back({make_solid_model({{0.5, 1.5}}), {0.9}, {1.8}});
    cases.push_back({make_sphere_model({1.0}), {0.0, 0.0, 0.5}, {2.5, 0.0, 0.0}});
    {
        VesselSpec vessel;
        vessel.geometry.kind = VesselGeometry::Kind::cylinder;
        vessel.geometry.cyl_radius = 1.0;
        vessel.geometry.cyl_height = 1.0;
        vessel.masses = {1.0};
        AlgVec b1(10, 0.0), b2(10, 0.0);
        b1[2] = 1.0;   // omega_z
        b1[9] = -1.0;  // epsilon
        b2[5] = -0.5;  // beta_z
        b2[9] = -2.0;
        cases.push_back({make_vessel_model(vessel), b1, b2});
    }

    std::uint64_t seed = 777000;
    for (const Case& c : cases) {
        for (const AlgVec& b : {c.b1, c.b2}) {
            const Estimate est = log_partition_estimate(c.model, b, {100000, ++seed});
            const double closed = log_partition(c.model, b);
            const double rel = est.std_error / est.value;
            INFO(c.model.name);
            CHECK(std::abs(closed - std::log(est.value)) <= 3.0 * rel);
        }
    }
}

TEST_CASE("gravity positions and momenta are independent") {
    VesselSpec vessel;
    vessel.geometry.kind = VesselGeometry::Kind::box;
    vessel.geometry.box_lo = {0.0, 0.0, 0.0};
    vessel.geometry.box_hi = {1.0, 1.0, 1.0};
    vessel.masses = {2.0};
    GalileanAlgebraElement gen;
    gen.epsilon = -1.0;
    gen.beta = {0.0, 0.0, -1.3};  // downward field of intensity 1.3

    const long n = 100000;
    const SampleBatch batch = sample_vessel(vessel, gen, n, 2047);
    double mz = 0.0, mp = 0.0;
    for (long i = 0; i < n; ++i) {
        mz += batch.coord(i, 0, 2);
        mp += batch.coord(i, 0, 5);
    }
    mz /= n;
    mp /= n;
    double cov = 0.0, vz = 0.0, vp = 0.0;
    for (long i = 0; i < n; ++i) {
        const double dz = batch.coord(i, 0, 2) - mz;
        const double dp = batch.coord(i, 0, 5) - mp;
        cov += dz * dp;
        vz += dz * dz;
        vp += dp * dp;
    }
    const double corr = cov / std::sqrt(vz * vp);
    CHECK(std::abs(corr) <= 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("juttner sampler aborts when the proposal is hopeless") {
    // At m b c^2 = 25 the mean acceptance is about e^{-25}, far below the
    // 1e-6 diagnostic threshold.
    CHECK_THROWS_AS(sample_juttner(25.0, 1.0, 1.0, 10, 1), EstimationError);
}

TEST_CASE("equipartition and maxwell-boltzmann kurtosis for the ideal gas") {
    const IdealGasSpec spec{1.0, {1.0, 3.0}};
    const double b = 2.0;
    const long n = 100000;
    const SampleBatch batch = sample_ideal(spec, b, n, 555);

    for (int p = 0; p < 2; ++p) {
        for (int axis = 0; axis < 3; ++axis) {
            double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
            for (long i = 0; i < n; ++i) {
                const double ke =
                    batch.coord(i, p, 3 + axis) * batch.coord(i, p, 3 + axis) /
                    (2.0 * spec.masses[p]);
                sum += ke;
                sum2 += ke * ke;
                const double pc = batch.coord(i, p, 3 + axis);
                const double u = pc / std::sqrt(spec.masses[p] / b);
                sum4 += u * u * u * u;
            }
            const double mean_ke = sum / n;
            const double se = std::sqrt((sum2 / n - mean_ke * mean_ke) / n);
            CHECK(std::abs(mean_ke - 0.5 / b) <= 3.0 * se);

            // Normal kurtosis 3 within 3 sqrt(24/n) (variance of the
            // kurtosis estimator for a gaussian).
            const double kurt = sum4 / n;
            CHECK(std::abs(kurt - 3.0) <= 3.0 * std::sqrt(24.0 / n));
        }
    }
}
