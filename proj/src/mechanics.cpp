#include "gibbs/mechanics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gibbs/models.hpp"
#include "gibbs/numerics.hpp"
#include "gibbs/oracle.hpp"

namespace gibbs {

namespace {

Vec3 force(const FlowSpec& spec, const Vec3& q, double m) {
    switch (spec.kind) {
        case FlowSpec::Kind::free:
            return Vec3::zero();
        case FlowSpec::Kind::gravity:
            return {0.0, 0.0, -m * spec.gravity_g};
        case FlowSpec::Kind::central_spring:
            return -spec.spring_mu * q;
        case FlowSpec::Kind::centrifuge_frame: {
            // U(r) = m f(r); grad f = beta/eps - ((omega x r) x omega)/eps^2
            //                        - (delta x omega)/eps^2.
            const GalileanAlgebraElement& b = spec.frame_b;
            const double e2 = b.epsilon * b.epsilon;
            const Vec3 grad = b.beta / b.epsilon - cross(cross(b.omega, q), b.omega) / e2 -
                              cross(b.delta, b.omega) / e2;
            return -m * grad;
        }
    }
    throw std::invalid_argument("integrate_flow: unsupported Hamiltonian kind");
}

void wrap_into_box(Vec3& q, double side) {
    q.x -= side * std::floor(q.x / side);
    q.y -= side * std::floor(q.y / side);
    q.z -= side * std::floor(q.z / side);
}

}  // namespace

PhasePoint leapfrog_step(const FlowSpec& spec, const PhasePoint& state,
                         const std::vector<double>& masses) {
    const size_t n = state.positions.size();
    PhasePoint next = state;
    const double half = 0.5 * spec.dt;
    for (size_t i = 0; i < n; ++i)
        next.momenta[i] += half * force(spec, next.positions[i], masses[i]);
    for (size_t i = 0; i < n; ++i) {
        next.positions[i] += (spec.dt / masses[i]) * next.momenta[i];
        if (spec.periodic_box > 0.0) wrap_into_box(next.positions[i], spec.periodic_box);
    }
    for (size_t i = 0; i < n; ++i)
        next.momenta[i] += half * force(spec, next.positions[i], masses[i]);
    return next;
}

Trajectory integrate_flow(const FlowSpec& spec, const PhasePoint& initial,
                          const std::vector<double>& masses) {
    if (!(spec.dt > 0.0) || spec.steps < 1)
        throw std::invalid_argument("integrate_flow: dt > 0 and steps >= 1 required");
    if (initial.positions.size() != masses.size() ||
        initial.momenta.size() != masses.size())
        throw std::invalid_argument("integrate_flow: state and mass sizes differ");

    Trajectory traj;
    traj.states.push_back(initial);
    traj.times.push_back(0.0);
    PhasePoint state = initial;
    for (long s = 1; s <= spec.steps; ++s) {
        state = leapfrog_step(spec, state, masses);
        if (s % spec.snapshot_stride == 0 || s == spec.steps) {
            traj.states.push_back(state);
            traj.times.push_back(s * spec.dt);
        }
    }
    return traj;
}

double conserved_drift(const Trajectory& traj,
                       const std::function<double(const PhasePoint&)>& observable) {
    if (traj.states.empty()) throw std::invalid_argument("conserved_drift: empty trajectory");
    const double ref = observable(traj.states.front());
    double drift = 0.0;
    for (const PhasePoint& s : traj.states)
        drift = std::max(drift, std::abs(observable(s) - ref));
    return drift;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t";
    for (size_t p = 0; p < (traj.states.empty() ? 0 : traj.states[0].positions.size()); ++p)
        os << ",x" << p << ",y" << p << ",z" << p << ",px" << p << ",py" << p << ",pz" << p;
    os << "\n";
    char buf[64];
    for (size_t i = 0; i < traj.states.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", traj.times[i]);
        os << buf;
        const PhasePoint& s = traj.states[i];
        for (size_t p = 0; p < s.positions.size(); ++p) {
            const double vals[6] = {s.positions[p].x, s.positions[p].y, s.positions[p].z,
                                    s.momenta[p].x,   s.momenta[p].y,   s.momenta[p].z};
            for (double v : vals) {
                std::snprintf(buf, sizeof(buf), ",%.17g", v);
                os << buf;
            }
        }
        os << "\n";
    }
}

namespace {

double ideal_gas_invariance(const IdealGasSpec& spec, double b, double horizon, long n,
                            std::uint64_t seed) {
    const double side = std::cbrt(spec.volume);
    SampleBatch batch = sample_ideal(spec, b, n, seed);

    FlowSpec flow;
    flow.kind = FlowSpec::Kind::free;
    flow.periodic_box = side;
    flow.dt = horizon / 16.0;
    flow.steps = 16;
    flow.snapshot_stride = flow.steps;

    const int np = batch.n_particles;
    for (long i = 0; i < batch.n_samples; ++i) {
        auto s = batch.mutable_sample(i);
        PhasePoint state;
        for (int p = 0; p < np; ++p) {
            state.positions.push_back({s[6 * p], s[6 * p + 1], s[6 * p + 2]});
            state.momenta.push_back({s[6 * p + 3], s[6 * p + 4], s[6 * p + 5]});
        }
        const Trajectory traj = integrate_flow(flow, state, spec.masses);
        const PhasePoint& out = traj.states.back();
        for (int p = 0; p < np; ++p) {
            s[6 * p] = out.positions[p].x;
            s[6 * p + 1] = out.positions[p].y;
            s[6 * p + 2] = out.positions[p].z;
            s[6 * p + 3] = out.momenta[p].x;
            s[6 * p + 4] = out.momenta[p].y;
            s[6 * p + 5] = out.momenta[p].z;
        }
    }

    // Positions stay uniform in the box under the wrapped free flow.
    const auto project = [](std::span<const double> z) { return z[0]; };
    const auto density = [](double) { return 1.0; };
    return gof_statistic(batch, project, density, 20, 0.0, side).p_value;
}

double sphere_invariance(const SphereSpec& spec, const Vec3& b, double horizon, long n,
                         std::uint64_t seed, const std::optional<Vec3>& axis_override) {
    SampleBatch batch = sample_sphere(spec, b, n, seed);
    const double angle = b.norm() * horizon;
    const Vec3 axis = axis_override ? normalized(*axis_override)
                                    : (b.norm() > 0.0 ? normalized(b) : Vec3::unit_z());
    const Mat3 rot = rotation_exp(axis, angle);
    for (long i = 0; i < batch.n_samples; ++i) {
        auto s = batch.mutable_sample(i);
        const Vec3 om = rot * Vec3{s[0], s[1], s[2]};
        s[0] = om.x;
        s[1] = om.y;
        s[2] = om.z;
    }

    // The Om.b marginal of the sphere state is ~ exp(R |b| s) on [-R, R].
    const double r = spec.radius;
    const Vec3 bhat = b.norm() > 0.0 ? normalized(b) : Vec3::unit_z();
    const double rb = r * b.norm();
    const auto project = [bhat](std::span<const double> z) {
        return dot(Vec3{z[0], z[1], z[2]}, bhat);
    };
    const auto density = [rb](double s) { return std::exp(rb * s); };
    return gof_statistic(batch, project, density, 20, -r, r).p_value;
}

}  // namespace

double flow_invariance_test(const ThermoModel& model, const AlgVec& b, double horizon, long n,
                            std::uint64_t seed,
                            const std::optional<Vec3>& rotation_axis_override) {
    switch (model.kind) {
        case ModelKind::ideal_gas:
            return ideal_gas_invariance(std::get<IdealGasSpec>(model.spec), b.at(0), horizon, n,
                                        seed);
        case ModelKind::sphere:
            return sphere_invariance(std::get<SphereSpec>(model.spec), vec3_from_alg(b), horizon,
                                     n, seed, rotation_axis_override);
        default:
            throw UnsupportedModelError(model.name + ": no flow-invariance harness");
    }
}

}  // namespace gibbs
