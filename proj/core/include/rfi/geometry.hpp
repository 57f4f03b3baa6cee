#pragma once

#include "rfi/scenario.hpp"

namespace rfi {

/// Derived geometry of the Earth cap visible from the satellite.
/// All lengths in meters, areas in m^2.
struct GeometrySummary {
  double d_min = 0.0;          // h - r_e
  double d_max = 0.0;          // sqrt(h^2 - r_e^2), horizon distance
  double d_ml = 0.0;           // slant range to the main-lobe footprint
  double cap_area = 0.0;       // 2 pi r_e^2 (1 - r_e/h)
  double footprint_area = 0.0;
  double lambda_ml = 0.0;      // expected clusters in the footprint
  double lambda_cap = 0.0;     // expected clusters on the whole cap
  double cos_theta_max = 0.0;  // r_e / h
};

/// Throws DomainError("no_ground_intersection") when the boresight ray at
/// the configured incidence angle misses the Earth.
[[nodiscard]] GeometrySummary derive_geometry(const Scenario& s);

/// Largest polar angle (at Earth's center) still visible: arccos(r_e/h).
[[nodiscard]] double max_polar_angle(const Scenario& s) noexcept;

/// Satellite-to-ground distance for a point at polar angle theta, by the law
/// of cosines. Throws DomainError("out_of_range") outside [0, max_polar_angle].
[[nodiscard]] double distance_from_polar_angle(const Scenario& s, double theta);

/// Same as distance_from_polar_angle but parameterized by cos(theta); no
/// range check. Used by the samplers, which draw cos(theta) directly.
[[nodiscard]] double distance_from_cos_polar(const Scenario& s, double cos_theta) noexcept;

/// Polar angle of the point where the boresight ray meets the ground.
/// distance_from_polar_angle at this angle equals d_ml.
[[nodiscard]] double footprint_polar_angle(const Scenario& s);

/// Cluster intensity per unit satellite distance, 2 pi (r_e/h) lambda_c x.
/// Integrates to lambda_cap over [d_min, d_max].
[[nodiscard]] double radial_intensity_weight(const Scenario& s, const GeometrySummary& geo,
                                             double x);

}  // namespace rfi
