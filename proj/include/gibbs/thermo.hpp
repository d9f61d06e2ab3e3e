#ifndef GIBBS_THERMO_HPP
#define GIBBS_THERMO_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gibbs/errors.hpp"
#include "gibbs/model_specs.hpp"
#include "gibbs/oracle.hpp"

namespace gibbs {

/// Element of the parameter algebra (or of its dual, identified with it
/// through the Euclidean pairing). Scalar models use size 1, the rotation
/// algebra size 3, the Galilean algebra size 10 as (omega, beta, delta, eps).
using AlgVec = std::vector<double>;

AlgVec to_alg(double b);
AlgVec to_alg(const Vec3& b);
AlgVec to_alg(const GalileanAlgebraElement& b);
Vec3 vec3_from_alg(const AlgVec& v);
GalileanAlgebraElement galilean_from_alg(const AlgVec& v);

struct AdmissibilityResult {
    bool admissible = true;
    std::string reason;
};

/// Sampling budget for oracle-backed evaluations.
struct McBudget {
    long n = 200000;
    std::uint64_t seed = 0x00C0FFEEULL;
};

enum class ModelKind {
    ideal_gas,
    gravity_gas,
    relativistic_gas,
    massless_gas,
    photon_gas,
    solid,
    sphere,
    vessel,
    custom,
};

/// A thermodynamic model: a phase-space domain, the coupling <J(z), b>, and
/// optional closed forms and algebra structure. All functions are pure;
/// instances are safe to share between threads.
struct ThermoModel {
    std::string name;
    ModelKind kind = ModelKind::custom;
    int dim_b = 1;
    int n_particles = 1;

    std::function<AdmissibilityResult(const AlgVec&)> admissible;

    /// <J(z), b> for a flattened phase point (b.H(z) for scalar models).
    std::function<double(std::span<const double>, const AlgVec&)> coupling;

    /// Integration domain for the oracle; may depend on b through momentum
    /// truncation. Absent for models without a finite-dimensional domain.
    std::function<Domain(const AlgVec&)> domain_for;

    std::function<double(const AlgVec&)> closed_form_log_partition;

    /// Analytic E_J(b) when the closed form differentiates in closed form.
    std::function<AlgVec(const AlgVec&)> closed_form_mean;

    /// Symplectic 1-cocycle Theta of the algebra (zero function when the
    /// momentum map is equivariant); required by theta_b.
    std::function<AlgVec(const AlgVec&)> cocycle_theta;

    /// J(z) as a dual vector (scalar models: {H(z)}).
    std::function<AlgVec(std::span<const double>)> momentum;

    /// Lie bracket [X, Y] and coadjoint action ad*_X xi on the algebra.
    std::function<AlgVec(const AlgVec&, const AlgVec&)> bracket;
    std::function<AlgVec(const AlgVec&, const AlgVec&)> ad_star;

    /// Adds -log(n_particles!) to log P (indistinguishable particles).
    bool extensive_entropy = false;

    std::variant<std::monostate, IdealGasSpec, GravityGasSpec, RelativisticGasSpec,
                 MasslessGasSpec, PhotonGasSpec, SolidSpec, SphereSpec, VesselSpec>
        spec;
};

struct ThermoReport {
    AlgVec b;
    double log_p = 0.0;
    AlgVec mean;                                // E_J(b), scalar E(b) in slot 0
    double entropy = 0.0;                       // S(b) = log P + <E_J, b>
    std::vector<std::vector<double>> variance;  // covariance of J (or of <J, ray>)
    double temperature = 0.0;                   // 1/(k b) when defined, else NaN
};

// ---------------------------------------------------------------------------
// Engine operations. All throw AdmissibilityError outside the model's
// admissible set and EstimationError when an oracle estimate fails to settle.
// ---------------------------------------------------------------------------

/// log P(b): closed form when the model has one, otherwise the Monte-Carlo
/// oracle under the given budget.
double log_partition(const ThermoModel& model, const AlgVec& b, const McBudget& budget = {});
double log_partition(const ThermoModel& model, double b, const McBudget& budget = {});

/// Monte-Carlo estimate of P(b) (not its log); forced oracle route.
Estimate log_partition_estimate(const ThermoModel& model, const AlgVec& b,
                                const McBudget& budget = {});

/// E_J(b) = -grad_b log P(b); analytic when available, otherwise central
/// 4th-order finite differences with step max(1e-5 |b|, 1e-7).
AlgVec mean_momentum(const ThermoModel& model, const AlgVec& b, const McBudget& budget = {});
double mean_energy(const ThermoModel& model, double b, const McBudget& budget = {});

/// S(b) = log P(b) + <E_J(b), b>.
double entropy(const ThermoModel& model, const AlgVec& b, const McBudget& budget = {});
double entropy(const ThermoModel& model, double b, const McBudget& budget = {});

/// <D E_J(b)(y), z>, the negated covariance of (<J,y>, <J,z>) under rho_b.
/// Symmetric in (y, z); non-positive on the diagonal.
double covariance_form(const ThermoModel& model, const AlgVec& b, const AlgVec& y,
                       const AlgVec& z, const McBudget& budget = {});

/// Theta_b(x) = Theta(x) - ad*_x E_J(b); vanishes at x = b.
AlgVec theta_b(const ThermoModel& model, const AlgVec& b, const AlgVec& x,
               const McBudget& budget = {});

/// Gamma_b evaluated on lifted representatives: <Theta_b(x1), [y1, b]>.
double gamma_form(const ThermoModel& model, const AlgVec& b, const AlgVec& x1,
                  const AlgVec& y1, const McBudget& budget = {});

/// Common parameter b' with E_a(b') + E_b(b') = E_a(b_a) + E_b(b_b), found by
/// bisection; always lies between b_a and b_b.
double equilibrate(const ThermoModel& model_a, const ThermoModel& model_b, double b_a,
                   double b_b);

/// Riemann-sum entropy sum rho_i log(1/rho_i) * cell_volume with 0 log 0 = 0.
/// The density must be non-negative and normalized within 1e-6.
double grid_entropy(std::span<const double> density_values, double cell_volume);

/// Same model with the momentum map shifted by a constant: J -> J + mu.
/// log P shifts by -<mu, b>, E_J by +mu; S, rho_b and Theta_b are unchanged.
ThermoModel shift_momentum(const ThermoModel& model, const AlgVec& mu);

/// Full report at b. With `ray` set, the variance block is the 1x1 variance of
/// <J, ray>; otherwise the dim_b x dim_b covariance matrix of J.
ThermoReport make_report(const ThermoModel& model, const AlgVec& b, double k_boltzmann = 1.0,
                         const McBudget& budget = {},
                         const std::optional<AlgVec>& ray = std::nullopt);

}  // namespace gibbs

#endif
