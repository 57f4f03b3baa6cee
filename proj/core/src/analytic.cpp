#include "rfi/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rfi/combinatorics.hpp"
#include "rfi/error.hpp"

namespace rfi {

namespace {

constexpr unsigned kQuadratureMaxDepth = 20;

void require_alpha(const Scenario& s) {
  if (!(s.path_loss_exponent > 2.0)) {
    throw DomainError("alpha_out_of_range", "path_loss_exponent must be > 2");
  }
}

void require_order(int max_order) {
  if (max_order < 4 || max_order > kMaxExactOrder) {
    throw DomainError("order_out_of_range", "max_order must lie in [4, " +
                                                std::to_string(kMaxExactOrder) + "]");
  }
}

double check_exponent(double value, const MgfOptions& opt, const char* where) {
  if (!(value <= opt.exponent_cap)) {
    throw DomainError("mgf_overflow", std::string(where) +
                                          " exponent exceeds cap; t is outside the usable domain");
  }
  return value;
}

// g eta (omega / x)^alpha
double unit_temperature(const Scenario& s, double x, double gain) {
  return gain * eta(s) * std::pow(omega(s) / x, s.path_loss_exponent);
}

void fill_moments(CumulantSet& cs) {
  const auto& k = cs.k;
  cs.mean = k[1];
  cs.variance = k[2];
  cs.std = std::sqrt(k[2]);
  cs.skewness = k[3] / std::pow(k[2], 1.5);
  cs.excess_kurtosis = k[4] / (k[2] * k[2]);
  cs.mu4 = k[4] + 3.0 * k[2] * k[2];
}

}  // namespace

double t_cluster_unit(const Scenario& s, Lobe lobe, double x) {
  if (!(x > 0.0)) {
    throw DomainError("out_of_range", "distance must be > 0");
  }
  return unit_temperature(s, x, lobe_gain(s, lobe));
}

double cgf_cluster(const Scenario& s, double x, double gain, double t, const MgfOptions& opt) {
  const double inner = check_exponent(unit_temperature(s, x, gain) * t, opt, "cluster");
  return check_exponent(s.bs_intensity * std::expm1(inner), opt, "cluster");
}

double mgf_cluster(const Scenario& s, double x, double gain, double t, const MgfOptions& opt) {
  return std::exp(cgf_cluster(s, x, gain, t, opt));
}

double mgf_cluster_series(const Scenario& s, double x, double gain, double t, int order) {
  if (order < 0 || order > kMaxExactOrder) {
    throw DomainError("order_out_of_range", "series order must lie in [0, " +
                                                std::to_string(kMaxExactOrder) + "]");
  }
  const double step = unit_temperature(s, x, gain) * t;
  double power = 1.0;  // step^n / n!
  double sum = 0.0;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) power *= step / n;
    sum += poisson_raw_moment(n, s.bs_intensity) * power;
  }
  return sum;
}

double cgf_main_lobe(const Scenario& s, const GeometrySummary& geo, double t,
                     const MgfOptions& opt) {
  const double cluster = cgf_cluster(s, geo.d_ml, s.gain.main_lobe_gain, t, opt);
  return check_exponent(geo.lambda_ml * std::expm1(cluster), opt, "main-lobe");
}

double mgf_main_lobe(const Scenario& s, const GeometrySummary& geo, double t,
                     const MgfOptions& opt) {
  return std::exp(cgf_main_lobe(s, geo, t, opt));
}

double cgf_side_lobe(const Scenario& s, const GeometrySummary& geo, double t, double rel_tol,
                     const MgfOptions& opt) {
  if (!(rel_tol > 0.0) || rel_tol > 1e-4) {
    throw DomainError("invalid_tolerance", "rel_tol must lie in (0, 1e-4]");
  }
  if (t == 0.0 || s.cluster_intensity == 0.0) return 0.0;

  // -(1 - M_cluster(x)) x, kept in expm1 form so small t does not cancel.
  const double gain = s.gain.side_lobe_gain;
  auto integrand = [&](double x) { return std::expm1(cgf_cluster(s, x, gain, t, opt)) * x; };

  double error = 0.0;
  double l1 = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, geo.d_min, geo.d_max, kQuadratureMaxDepth, rel_tol, &error, &l1);
  if (!(error <= rel_tol * l1) && error > std::numeric_limits<double>::min()) {
    throw DomainError("quadrature_nonconvergence",
                      "side-lobe integral did not reach the requested tolerance");
  }
  const double prefactor =
      2.0 * std::numbers::pi * (s.earth_radius / s.sat_center_distance) * s.cluster_intensity;
  return check_exponent(prefactor * integral, opt, "side-lobe");
}

double mgf_side_lobe(const Scenario& s, const GeometrySummary& geo, double t, double rel_tol,
                     const MgfOptions& opt) {
  return std::exp(cgf_side_lobe(s, geo, t, rel_tol, opt));
}

CumulantSet cumulants_main_lobe(const Scenario& s, const GeometrySummary& geo, int max_order) {
  require_alpha(s);
  require_order(max_order);
  const double unit = unit_temperature(s, geo.d_ml, s.gain.main_lobe_gain);

  CumulantSet cs;
  cs.lobe = Lobe::main;
  cs.k.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
  double unit_pow = 1.0;
  for (int n = 1; n <= max_order; ++n) {
    unit_pow *= unit;
    cs.k[n] = geo.lambda_ml * poisson_raw_moment(n, s.bs_intensity) * unit_pow;
  }
  fill_moments(cs);
  return cs;
}

CumulantSet cumulants_side_lobe(const Scenario& s, const GeometrySummary& geo, int max_order) {
  require_alpha(s);
  require_order(max_order);
  const double alpha = s.path_loss_exponent;
  const double unit_near = unit_temperature(s, geo.d_min, s.gain.side_lobe_gain);
  const double log_ratio = std::log(geo.d_min / geo.d_max);
  const double prefactor =
      2.0 * std::numbers::pi * (s.earth_radius / s.sat_center_distance) * s.cluster_intensity;

  CumulantSet cs;
  cs.lobe = Lobe::side;
  cs.k.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
  double unit_pow = 1.0;
  for (int n = 1; n <= max_order; ++n) {
    unit_pow *= unit_near;
    // integral of x^(1 - n alpha) over [d_min, d_max], scaled by
    // d_min^(n alpha); written with expm1 because at n = 1 and alpha near 2
    // the two endpoint terms nearly cancel (the alpha -> 2 limit is
    // d_min^2 ln(d_max / d_min)).
    const double e = n * alpha - 2.0;
    const double radial = geo.d_min * geo.d_min * (-std::expm1(e * log_ratio)) / e;
    cs.k[n] = prefactor * poisson_raw_moment(n, s.bs_intensity) * unit_pow * radial;
  }
  fill_moments(cs);
  return cs;
}

CumulantSet cumulants(const Scenario& s, const GeometrySummary& geo, Lobe lobe, int max_order) {
  return lobe == Lobe::main ? cumulants_main_lobe(s, geo, max_order)
                            : cumulants_side_lobe(s, geo, max_order);
}

ThresholdVerdict threshold_verdict(const CumulantSet& cs, double tau) {
  return ThresholdVerdict{cs.lobe, cs.mean, cs.std, tau, cs.mean > tau};
}

std::vector<double> numeric_cumulants_from_cgf(const std::function<double(double)>& cgf,
                                               int order, double scale) {
  if (order < 1 || order > 4) {
    throw DomainError("order_out_of_range", "finite-difference order must lie in [1, 4]");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("invalid_scale", "scale must be finite and > 0");
  }
  const double h =
      std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (order + 2)) / scale;
  const double fm2 = cgf(-2.0 * h);
  const double fm1 = cgf(-h);
  const double f0 = cgf(0.0);
  const double fp1 = cgf(h);
  const double fp2 = cgf(2.0 * h);

  std::vector<double> k(static_cast<std::size_t>(order) + 1, 0.0);
  k[1] = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  if (order >= 2) {
    k[2] = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  }
  if (order >= 3) {
    k[3] = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
  }
  if (order >= 4) {
    k[4] = (fp2 - 4.0 * fp1 + 6.0 * f0 - 4.0 * fm1 + fm2) / (h * h * h * h);
  }
  return k;
}

std::vector<double> cgf_numeric_cumulants(const std::function<double(double)>& mgf, int order,
                                          double scale) {
  return numeric_cumulants_from_cgf([&](double t) { return std::log(mgf(t)); }, order, scale);
}

}  // namespace rfi
