#ifndef GIBBS_MECHANICS_HPP
#define GIBBS_MECHANICS_HPP

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "gibbs/thermo.hpp"

namespace gibbs {

/// One separable Hamiltonian flow H = T(p) + U(q).
struct FlowSpec {
    enum class Kind { free, gravity, central_spring, centrifuge_frame };
    Kind kind = Kind::free;
    double dt = 1e-3;
    long steps = 1;

    double gravity_g = 0.0;   // gravity kind
    double spring_mu = 0.0;   // central_spring kind
    /// Side of a periodic box (positions wrapped into [0, side)); 0 disables.
    double periodic_box = 0.0;
    /// Frame generator for the centrifuge_frame potential m f(r).
    GalileanAlgebraElement frame_b;

    long snapshot_stride = 1;
};

struct PhasePoint {
    std::vector<Vec3> positions;
    std::vector<Vec3> momenta;
};

struct Trajectory {
    std::vector<PhasePoint> states;
    std::vector<double> times;
};

/// One kick-drift-kick leapfrog step.
PhasePoint leapfrog_step(const FlowSpec& spec, const PhasePoint& state,
                         const std::vector<double>& masses);

/// Leapfrog trajectory; symplectic and time-reversible. Snapshots every
/// snapshot_stride steps (the initial and final states always included).
Trajectory integrate_flow(const FlowSpec& spec, const PhasePoint& initial,
                          const std::vector<double>& masses);

/// max_t |observable(state_t) - observable(state_0)| along the trajectory.
double conserved_drift(const Trajectory& traj,
                       const std::function<double(const PhasePoint&)>& observable);

/// CSV rows: t, then x,y,z,px,py,pz per particle.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// Statistical invariance of the Gibbs state under its own flow: draws a batch
/// from rho_b, transports every point for `horizon`, and returns the p-value
/// of the transported batch against the same density.
///   ideal gas: free flow in a periodic box, tested on a position marginal;
///   sphere: rotation by angle |b| * horizon about b (or about the override
///   axis, used as a symmetry-breaking control), tested on the Om.b marginal.
double flow_invariance_test(const ThermoModel& model, const AlgVec& b, double horizon, long n,
                            std::uint64_t seed,
                            const std::optional<Vec3>& rotation_axis_override = std::nullopt);

}  // namespace gibbs

#endif
