#ifndef GIBBS_MODEL_SPECS_HPP
#define GIBBS_MODEL_SPECS_HPP

#include <vector>

#include "gibbs/lie.hpp"
#include "gibbs/vec3.hpp"

namespace gibbs {

/// N point particles in a vessel of volume V, free flight between collisions.
struct IdealGasSpec {
    double volume = 1.0;                 // m^3
    std::vector<double> masses = {1.0};  // kg
};

/// Vertical column of section `section_area` and height `height` in a uniform
/// downward gravity field of intensity `gravity`; z measured up from the bottom.
struct GravityGasSpec {
    double section_area = 1.0;  // m^2
    double height = 1.0;        // m
    double gravity = 1.0;       // m/s^2
    std::vector<double> masses = {1.0};
};

struct RelativisticGasSpec {
    double volume = 1.0;
    double light_speed = 1.0;
    std::vector<double> masses = {1.0};  // rest masses
};

/// Independent one-dimensional harmonic oscillators, one per listed frequency.
/// A solid of N atoms corresponds to a list of length 3N.
struct SolidSpec {
    std::vector<double> frequencies = {1.0};  // Hz
};

struct SphereSpec {
    double radius = 1.0;
};

struct MasslessGasSpec {
    double volume = 1.0;
    double light_speed = 1.0;
    int n_particles = 1;
};

struct PhotonGasSpec {
    double volume = 1.0;
    double light_speed = 1.0;
};

struct VesselGeometry {
    enum class Kind { box, cylinder };
    Kind kind = Kind::box;
    Vec3 box_lo{0.0, 0.0, 0.0};
    Vec3 box_hi{1.0, 1.0, 1.0};
    // Cylinder: axis e_z through the origin, z in [0, height].
    double cyl_radius = 1.0;
    double cyl_height = 1.0;

    double volume() const;
    /// Max |r| over the region (used for rejection envelopes).
    double max_point_norm() const;
    bool contains(const Vec3& r) const;
};

/// Gas in a rigid vessel carried by the one-parameter Galilean motion
/// generated by a GalileanAlgebraElement.
struct VesselSpec {
    VesselGeometry geometry;
    std::vector<double> masses = {1.0};
};

}  // namespace gibbs

#endif
