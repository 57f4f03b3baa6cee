#include "validate.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "rfi/analytic.hpp"
#include "rfi/geometry.hpp"

namespace rfi::cli {

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string describe(const char* format, double a, double b, double c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

CheckResult relative_check(std::string name, double got, double want, double tol) {
  const double err = rel_diff(got, want);
  return {std::move(name), err <= tol,
          describe("got %.10g want %.10g rel_err %.2e", got, want, err)};
}

CheckResult sigma_check(std::string name, double mc, double analytic, double se) {
  const double z = std::abs(mc - analytic) / se;
  return {std::move(name), z < 3.0, describe("mc %.6g analytic %.6g z %.2f", mc, analytic, z)};
}

}  // namespace

std::vector<CheckResult> run_validation(const Scenario& s, const McConfig& mc) {
  std::vector<CheckResult> checks;
  const GeometrySummary geo = derive_geometry(s);
  const double ratio = s.earth_radius / s.sat_center_distance;

  checks.push_back(relative_check(
      "geometry.cap_area_identity",
      std::numbers::pi * ratio * (geo.d_max * geo.d_max - geo.d_min * geo.d_min), geo.cap_area,
      1e-12));
  checks.push_back(relative_check("geometry.d_ml_consistency",
                                  distance_from_polar_angle(s, footprint_polar_angle(s)), geo.d_ml,
                                  1e-9));
  checks.push_back({"geometry.distance_ordering", geo.d_min < geo.d_ml && geo.d_ml < geo.d_max,
                    describe("d_min %.6g d_ml %.6g d_max %.6g", geo.d_min, geo.d_ml, geo.d_max)});

  const CumulantSet main = cumulants_main_lobe(s, geo);
  const CumulantSet side = cumulants_side_lobe(s, geo);
  if (main.mean > 0.0) {
    const auto k = cgf_numeric_cumulants([&](double t) { return mgf_main_lobe(s, geo, t); }, 2,
                                         main.mean);
    checks.push_back(relative_check("cgf.main.k1", k[1], main.k[1], 1e-5));
    checks.push_back(relative_check("cgf.main.k2", k[2], main.k[2], 1e-5));
  }
  if (side.mean > 0.0) {
    const auto k = numeric_cumulants_from_cgf(
        [&](double t) { return cgf_side_lobe(s, geo, t); }, 2, side.mean);
    checks.push_back(relative_check("cgf.side.k1", k[1], side.k[1], 1e-5));
    checks.push_back(relative_check("cgf.side.k2", k[2], side.k[2], 1e-5));
  }

  for (Lobe lobe : {Lobe::main, Lobe::side}) {
    const GridEstimate grid =
        estimate_grid(s, geo, lobe, kValidationAlphas, kValidationBsIntensities, mc);
    for (std::size_t ai = 0; ai < kValidationAlphas.size(); ++ai) {
      for (std::size_t li = 0; li < kValidationBsIntensities.size(); ++li) {
        Scenario point = s;
        point.path_loss_exponent = kValidationAlphas[ai];
        point.bs_intensity = kValidationBsIntensities[li];
        const CumulantSet cs = cumulants(point, geo, lobe);
        const McEstimate& e = grid.at(ai, li);
        char label[96];
        std::snprintf(label, sizeof label, "oracle.%s.alpha=%.2f.lambda_bs=%g",
                      std::string(to_string(lobe)).c_str(), kValidationAlphas[ai],
                      kValidationBsIntensities[li]);
        checks.push_back(sigma_check(std::string(label) + ".mean", e.mean, cs.mean, e.se_mean));
        checks.push_back(
            sigma_check(std::string(label) + ".variance", e.variance, cs.variance, e.se_variance));
      }
    }
  }
  return checks;
}

}  // namespace rfi::cli
