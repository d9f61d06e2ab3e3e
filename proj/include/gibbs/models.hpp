#ifndef GIBBS_MODELS_HPP
#define GIBBS_MODELS_HPP

#include "gibbs/bessel.hpp"
#include "gibbs/model_specs.hpp"
#include "gibbs/thermo.hpp"

namespace gibbs {

// ---------------------------------------------------------------------------
// Closed-form log-partitions and related physics. All scalar-parameter forms
// require b > 0 and throw AdmissibilityError otherwise.
// ---------------------------------------------------------------------------

/// sum_i [ log V + 3/2 log(2 pi m_i / b) ].
double ideal_gas_log_partition(const IdealGasSpec& spec, double b);

/// Equation of state: Pi(b) = (2/3) E(b) / V = N / (b V).
double ideal_gas_pressure(const IdealGasSpec& spec, double b);

/// sum_i log [ Sigma (2 pi m_i / b)^{3/2} (1 - exp(-m_i g b h)) / (m_i g b) ],
/// evaluated cancellation-safely; reduces to an ideal gas of volume Sigma h
/// as g -> 0.
double gravity_gas_log_partition(const GravityGasSpec& spec, double b);

/// sum_i [ log(4 pi V c / b) + 2 log m_i + log K2(m_i b c^2) ], overflow-safe.
double relativistic_log_partition(const RelativisticGasSpec& spec, double b);

/// n log(8 pi V / (c^3 b^3)).
double massless_log_partition(double volume, double c, int n, double b);

/// log P = 16 pi V / (c^3 b^3); the photon count is Poisson with this mean.
double photon_log_partition(double volume, double c, double b);

/// Poisson pmf of the photon number: lambda^n e^{-lambda} / n!.
double photon_number_pmf(double volume, double c, double b, int n);

/// -sum_i log nu_i - L log b, one oscillator per listed frequency.
double solid_log_partition(const SolidSpec& spec, double b);

/// log(4 pi R^2) + log(sinh(y)/y) with y = R^2 |b|; consistent with the
/// momentum map J(m) = -R m (exponent R Om.b). Any b is admissible.
double sphere_log_partition(const SphereSpec& spec, const Vec3& b);

/// Normalized density of the sphere state at an on-sphere point.
double sphere_density(const SphereSpec& spec, const Vec3& b, const Vec3& point);

// ---------------------------------------------------------------------------
// Moving vessel (one-parameter Galilean motion). Requires epsilon != 0; the
// Gibbs state exists iff epsilon < 0.
// ---------------------------------------------------------------------------

/// Frame potential f(r0) = r0.beta/eps - |omega x r0|^2/(2 eps^2)
///                  - (delta/eps).((omega/eps) x r0) - |delta|^2/(2 eps^2).
double frame_potential(const GalileanAlgebraElement& b, const Vec3& r0);

/// Velocity of the moving frame at r0: U*(r0) = (omega x r0 + delta) / eps.
Vec3 drift_velocity(const GalileanAlgebraElement& b, const Vec3& r0);

/// <J_i, b> = -eps (|p0|^2/(2 m_i) + m_i f(r0)) with p0 = m_i (v0 - U*).
double vessel_coupling(const VesselSpec& spec, const GalileanAlgebraElement& b, int i,
                       const Vec3& r0, const Vec3& p0);

/// log P(b) for the vessel: Gaussian momentum factors in closed form times
/// the spatial integral of exp(eps m_i f) over the geometry by tensor
/// quadrature. Requires epsilon < 0.
double vessel_log_partition(const VesselSpec& spec, const GalileanAlgebraElement& b,
                            int nodes_per_axis = 48);

/// Normalized radial marginal of particle i over the cylinder cross-section
/// for a pure rotation (omega along e_z, beta = delta = 0):
/// density(D) ~ D exp(m_i omega^2 D^2 / (-2 eps)).
double centrifuge_radial_density(const VesselSpec& spec, const GalileanAlgebraElement& b,
                                 int i, double delta_radius);

/// Mean of the radial marginal above (quadrature).
double centrifuge_mean_radius(const VesselSpec& spec, const GalileanAlgebraElement& b, int i);

// ---------------------------------------------------------------------------
// Model factories wiring the closed forms, admissibility predicates, domains
// and couplings into the generic engine.
// ---------------------------------------------------------------------------

ThermoModel make_ideal_gas_model(const IdealGasSpec& spec);
ThermoModel make_gravity_gas_model(const GravityGasSpec& spec);
ThermoModel make_relativistic_gas_model(const RelativisticGasSpec& spec);
ThermoModel make_massless_gas_model(const MasslessGasSpec& spec);
ThermoModel make_photon_gas_model(const PhotonGasSpec& spec);
ThermoModel make_solid_model(const SolidSpec& spec);
ThermoModel make_sphere_model(const SphereSpec& spec);
ThermoModel make_vessel_model(const VesselSpec& spec);

}  // namespace gibbs

#endif
