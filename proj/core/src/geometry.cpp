#include "rfi/geometry.hpp"

#include <cmath>
#include <numbers>

#include "rfi/error.hpp"

namespace rfi {

GeometrySummary derive_geometry(const Scenario& s) {
  const double h = s.sat_center_distance;
  const double re = s.earth_radius;
  const double i = s.incidence_angle;

  const double off_axis = h * std::sin(i);
  if (off_axis >= re) {
    throw DomainError("no_ground_intersection",
                      "boresight at the configured incidence angle misses the Earth");
  }

  GeometrySummary g;
  g.d_min = h - re;
  g.d_max = std::sqrt(h * h - re * re);
  // Near intersection of the boresight ray with the sphere.
  g.d_ml = h * std::cos(i) - std::sqrt(re * re - off_axis * off_axis);
  g.cos_theta_max = re / h;
  g.cap_area = 2.0 * std::numbers::pi * re * re * (1.0 - g.cos_theta_max);
  g.footprint_area = s.footprint_area;
  g.lambda_ml = s.cluster_intensity * s.footprint_area;
  g.lambda_cap = s.cluster_intensity * g.cap_area;
  return g;
}

double max_polar_angle(const Scenario& s) noexcept {
  return std::acos(s.earth_radius / s.sat_center_distance);
}

double distance_from_cos_polar(const Scenario& s, double cos_theta) noexcept {
  const double h = s.sat_center_distance;
  const double re = s.earth_radius;
  return std::sqrt(re * re + h * h - 2.0 * h * re * cos_theta);
}

double distance_from_polar_angle(const Scenario& s, double theta) {
  if (!(theta >= 0.0) || theta > max_polar_angle(s)) {
    throw DomainError("out_of_range", "polar angle outside the exposed cap");
  }
  return distance_from_cos_polar(s, std::cos(theta));
}

double footprint_polar_angle(const Scenario& s) {
  const double sin_ground = s.sat_center_distance * std::sin(s.incidence_angle) / s.earth_radius;
  if (sin_ground >= 1.0) {
    throw DomainError("no_ground_intersection",
                      "boresight at the configured incidence angle misses the Earth");
  }
  // Triangle (Earth center, satellite, ground point): the angle at the
  // ground point is pi - asin(sin_ground), so the center angle is the rest.
  return std::asin(sin_ground) - s.incidence_angle;
}

double radial_intensity_weight(const Scenario& s, const GeometrySummary& geo, double x) {
  if (!(x >= geo.d_min) || x > geo.d_max) {
    throw DomainError("out_of_range", "distance outside [d_min, d_max]");
  }
  return 2.0 * std::numbers::pi * (s.earth_radius / s.sat_center_distance) *
         s.cluster_intensity * x;
}

}  // namespace rfi
