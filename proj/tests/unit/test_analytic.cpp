#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rfi/analytic.hpp"
#include "rfi/combinatorics.hpp"
#include "rfi/error.hpp"

using namespace rfi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Scenario at(double alpha, double bs) {
  Scenario s = default_scenario();
  s.path_loss_exponent = alpha;
  s.bs_intensity = bs;
  return s;
}

std::string code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "<no error>";
}

// Side-lobe cumulant by Simpson's rule in y = ln x, where the integrand
// 2 pi (r_e/h) lambda_c p_n (g eta omega^alpha)^n x^(2 - n alpha) is smooth.
double side_cumulant_simpson(const Scenario& s, const GeometrySummary& g, int n) {
  const double a = s.path_loss_exponent;
  const double c = std::pow(s.gain.side_lobe_gain * eta(s) * std::pow(omega(s), a), n);
  const double pref = 2.0 * std::numbers::pi * (s.earth_radius / s.sat_center_distance) *
                      s.cluster_intensity * poisson_raw_moment(n, s.bs_intensity) * c;
  const double lo = std::log(g.d_min);
  const double hi = std::log(g.d_max);
  const int panels = 4000;
  const double h = (hi - lo) / panels;
  auto f = [&](double y) { return std::exp((2.0 - n * a) * y); };
  double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) sum += f(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return pref * sum * h / 3.0;
}

}  // namespace

TEST_CASE("per-station temperature") {
  const Scenario s = at(2.0, 100.0);
  const GeometrySummary g = derive_geometry(default_scenario());
  CHECK(rel(t_cluster_unit(s, Lobe::main, g.d_ml), 3.478869056422456) < 1e-12);
  CHECK(rel(t_cluster_unit(s, Lobe::side, g.d_ml),
            t_cluster_unit(s, Lobe::main, g.d_ml) * std::pow(10.0, -5.5)) < 1e-14);
  CHECK(rel(t_cluster_unit(s, Lobe::main, 2.0 * g.d_ml),
            0.25 * t_cluster_unit(s, Lobe::main, g.d_ml)) < 1e-14);
}

TEST_CASE("cluster MGF") {
  const Scenario s = at(2.05, 100.0);
  const GeometrySummary g = derive_geometry(s);
  const double gain = s.gain.main_lobe_gain;
  const double unit = t_cluster_unit(s, Lobe::main, g.d_ml);

  CHECK(mgf_cluster(s, g.d_ml, gain, 0.0) == 1.0);
  CHECK(mgf_cluster(s, g.d_min, 1e-3, 0.0) == 1.0);
  const Scenario empty = at(2.05, 0.0);
  for (double t : {-1.0, 0.01, 0.3}) CHECK(mgf_cluster(empty, g.d_ml, gain, t) == 1.0);

  const double h = 1e-6 / unit;
  const double fd =
      (mgf_cluster(s, g.d_ml, gain, h) - mgf_cluster(s, g.d_ml, gain, -h)) / (2.0 * h);
  CHECK(rel(fd, s.bs_intensity * unit) < 1e-6);

  CHECK(code_of([&] { (void)mgf_cluster(s, g.d_ml, gain, 1000.0); }) == "mgf_overflow");
  MgfOptions tight;
  tight.exponent_cap = 1.0;
  CHECK(code_of([&] { (void)mgf_cluster(s, g.d_ml, gain, 2.0 / unit, tight); }) ==
        "mgf_overflow");
}

TEST_CASE("cluster MGF series") {
  const GeometrySummary g = derive_geometry(default_scenario());
  for (double bs : {1.0, 50.0, 200.0}) {
    const Scenario s = at(2.05, bs);
    const double unit = t_cluster_unit(s, Lobe::main, g.d_ml);
    CHECK(mgf_cluster_series(s, g.d_ml, 1.0, 0.3, 0) == 1.0);
    for (double ut : {-0.01, -0.004, 0.001, 0.006, 0.01}) {
      const double t = ut / unit;
      const double closed = mgf_cluster(s, g.d_ml, 1.0, t);
      CHECK(rel(mgf_cluster_series(s, g.d_ml, 1.0, t, 20), closed) < 1e-9);
      // The order-12 remainder is about (bs ut)^13 / 13!, so 1e-9 holds while bs |ut| <= 1.
      if (bs * std::abs(ut) <= 1.0) {
        CHECK(rel(mgf_cluster_series(s, g.d_ml, 1.0, t, 12), closed) < 1e-9);
      }
      double tail = 0.0;
      double tn_over_fact = 1.0;
      for (int n = 1; n <= 20; ++n) {
        tn_over_fact *= unit * t / n;
        if (n > 12) tail += poisson_raw_moment(n, bs) * tn_over_fact;
      }
      CHECK(std::abs(closed - mgf_cluster_series(s, g.d_ml, 1.0, t, 12) - tail) <= 1e-9 * closed);
    }
    // Second-order coefficient: difference between the order-2 and order-1 truncations.
    const double t = 1e-3 / unit;
    const double c2 =
        mgf_cluster_series(s, g.d_ml, 1.0, t, 2) - mgf_cluster_series(s, g.d_ml, 1.0, t, 1);
    CHECK(rel(c2, poisson_raw_moment(2, bs) * unit * unit * t * t / 2.0) < 1e-9);
  }
  const Scenario s = default_scenario();
  CHECK(code_of([&] { (void)mgf_cluster_series(s, g.d_ml, 1.0, 0.1, 21); }) ==
        "order_out_of_range");
}

TEST_CASE("main-lobe MGF") {
  const Scenario s = at(2.05, 100.0);
  const GeometrySummary g = derive_geometry(s);
  CHECK(mgf_main_lobe(s, g, 0.0) == 1.0);

  Scenario none = s;
  none.cluster_intensity = 0.0;
  const GeometrySummary g0 = derive_geometry(none);
  for (double t : {-0.5, 0.001, 0.01}) CHECK(mgf_main_lobe(none, g0, t) == 1.0);

  const double unit = t_cluster_unit(s, Lobe::main, g.d_ml);
  for (double ut : {-0.02, 0.003, 0.01, 0.02}) {
    const double t = ut / unit;
    const double direct = g.lambda_ml * (mgf_cluster(s, g.d_ml, s.gain.main_lobe_gain, t) - 1.0);
    CHECK(rel(cgf_main_lobe(s, g, t), direct) < 1e-14);
  }

  const CumulantSet cs = cumulants_main_lobe(s, g);
  const auto k = numeric_cumulants_from_cgf([&](double t) { return cgf_main_lobe(s, g, t); }, 2,
                                            cs.mean);
  CHECK(rel(k[1], cs.k[1]) < 1e-6);
  const auto k_mgf =
      cgf_numeric_cumulants([&](double t) { return mgf_main_lobe(s, g, t); }, 2, cs.mean);
  CHECK(rel(k_mgf[1], cs.k[1]) < 1e-5);
  CHECK(rel(k_mgf[2], cs.k[2]) < 1e-5);
}

TEST_CASE("side-lobe MGF") {
  const Scenario s = at(2.05, 100.0);
  const GeometrySummary g = derive_geometry(s);
  CHECK(mgf_side_lobe(s, g, 0.0) == 1.0);

  Scenario deaf = s;
  deaf.gain.side_lobe_gain = 1e-30;
  CHECK(mgf_side_lobe(deaf, g, 1.0) == doctest::Approx(1.0).epsilon(1e-20));

  const CumulantSet cs = cumulants_side_lobe(s, g);
  for (double t : {0.01, 0.1, 1.0, 5.0}) CHECK(mgf_side_lobe(s, g, t) >= 1.0);

  const auto k = numeric_cumulants_from_cgf([&](double t) { return cgf_side_lobe(s, g, t); }, 2,
                                            cs.mean);
  CHECK(rel(k[1], cs.k[1]) < 1e-6);
  CHECK(rel(k[2], cs.k[2]) < 1e-5);
  const auto k_mgf =
      cgf_numeric_cumulants([&](double t) { return mgf_side_lobe(s, g, t); }, 1, cs.mean);
  CHECK(rel(k_mgf[1], cs.k[1]) < 1e-5);

  CHECK(code_of([&] { (void)mgf_side_lobe(s, g, 0.1, 0.0); }) == "invalid_tolerance");
  CHECK(code_of([&] { (void)mgf_side_lobe(s, g, 0.1, 1e-3); }) == "invalid_tolerance");
  CHECK(code_of([&] { (void)mgf_side_lobe(s, g, 1e9); }) == "mgf_overflow");
}

TEST_CASE("numeric cumulants of a Poisson MGF") {
  const auto k = cgf_numeric_cumulants([](double t) { return std::exp(std::expm1(t)); }, 4, 1.0);
  REQUIRE(k.size() == 5);
  for (int n = 1; n <= 4; ++n) CHECK_MESSAGE(rel(k[n], 1.0) < 1e-4, "n=" << n);
  const double lambda = 7.5;
  const auto k2 = cgf_numeric_cumulants(
      [&](double t) { return std::exp(lambda * std::expm1(t)); }, 2, lambda);
  CHECK(rel(k2[1], lambda) < 1e-6);
  CHECK(rel(k2[2], lambda) < 1e-4);
}

TEST_CASE("main-lobe cumulants at the reference point") {
  const GeometrySummary g = derive_geometry(default_scenario());
  const CumulantSet c100 = cumulants_main_lobe(at(2.0001, 100.0), g);
  CHECK(rel(c100.mean, 55.5628) < 1e-4);
  CHECK(rel(c100.std, 139.5998) < 1e-4);
  CHECK(c100.mean >= 20.0);
  CHECK(c100.mean <= 100.0);
  CHECK(c100.variance == c100.k[2]);
  CHECK(c100.mu4 == c100.k[4] + 3.0 * c100.k[2] * c100.k[2]);
  CHECK(rel(c100.skewness, c100.k[3] / std::pow(c100.k[2], 1.5)) < 1e-15);

  const CumulantSet c0 = cumulants_main_lobe(at(2.0001, 0.0), g);
  for (int n = 1; n <= 4; ++n) CHECK(c0.k[n] == 0.0);

  const CumulantSet c8 = cumulants_main_lobe(at(2.05, 100.0), g, 8);
  REQUIRE(c8.k.size() == 9);
  CHECK(c8.k[0] == 0.0);
  CHECK(code_of([&] { (void)cumulants_main_lobe(at(2.05, 100.0), g, 3); }) ==
        "order_out_of_range");
}

TEST_CASE("side-lobe cumulants at the reference point") {
  const GeometrySummary g = derive_geometry(default_scenario());
  const double expect_mean[] = {0.40166, 0.803328, 1.60666};
  const double bs[] = {50.0, 100.0, 200.0};
  const bool exceeds[] = {false, false, true};
  for (int i = 0; i < 3; ++i) {
    const Scenario s = at(2.0001, bs[i]);
    const CumulantSet cs = cumulants_side_lobe(s, g);
    CHECK(rel(cs.mean, expect_mean[i]) < 1e-4);
    CHECK(threshold_verdict(cs, s.rfi_threshold).mean_exceeds == exceeds[i]);
  }
  CHECK(rel(cumulants_side_lobe(at(2.0001, 100.0), g).std, 0.02291) < 1e-3);

  // alpha -> 2 limit of the mean: 2 pi (r_e/h) g eta omega^2 lambda_c lambda_bs ln(d_max/d_min).
  const Scenario s = at(2.0001, 100.0);
  const double limit = 2.0 * std::numbers::pi * (s.earth_radius / s.sat_center_distance) *
                       s.gain.side_lobe_gain * eta(s) * omega(s) * omega(s) *
                       s.cluster_intensity * s.bs_intensity * std::log(g.d_max / g.d_min);
  CHECK(rel(cumulants_side_lobe(s, g).mean, limit) < 2e-3);

  CHECK(code_of([&] { (void)cumulants_side_lobe(at(2.0, 100.0), g); }) == "alpha_out_of_range");
  CHECK(code_of([&] { (void)cumulants(at(1.5, 100.0), g, Lobe::side); }) ==
        "alpha_out_of_range");
}

TEST_CASE("side-lobe cumulants against independent quadrature") {
  const GeometrySummary g = derive_geometry(default_scenario());
  for (double alpha : {2.0001, 2.05, 2.2}) {
    const Scenario s = at(alpha, 100.0);
    const CumulantSet cs = cumulants_side_lobe(s, g, 6);
    for (int n = 1; n <= 6; ++n) {
      CHECK_MESSAGE(rel(cs.k[n], side_cumulant_simpson(s, g, n)) < 1e-10,
                    "alpha=" << alpha << " n=" << n);
    }
  }
}

TEST_CASE("cumulant scaling laws") {
  const GeometrySummary g = derive_geometry(default_scenario());
  const Scenario base = at(2.1, 100.0);
  for (Lobe lobe : {Lobe::main, Lobe::side}) {
    const CumulantSet ref = cumulants(base, g, lobe);
    for (double c : {0.5, 3.0}) {
      Scenario gained = base;
      gained.gain.main_lobe_gain *= c;
      gained.gain.side_lobe_gain *= c;
      Scenario hotter = base;
      hotter.tx_power *= c;
      Scenario denser = base;
      denser.cluster_intensity *= c;
      const GeometrySummary gd = derive_geometry(denser);
      const CumulantSet a = cumulants(gained, g, lobe);
      const CumulantSet b = cumulants(hotter, g, lobe);
      const CumulantSet d = cumulants(denser, gd, lobe);
      for (int n = 1; n <= 4; ++n) {
        CHECK(rel(a.k[n], ref.k[n] * std::pow(c, n)) < 1e-13);
        CHECK(rel(b.k[n], ref.k[n] * std::pow(c, n)) < 1e-13);
        CHECK(rel(d.k[n], ref.k[n] * c) < 1e-13);
      }
    }
  }
}

TEST_CASE("shape statistics are positive") {
  const GeometrySummary g = derive_geometry(default_scenario());
  for (double alpha : {2.0001, 2.05, 2.1, 2.2}) {
    for (double bs : {0.5, 50.0, 200.0}) {
      for (Lobe lobe : {Lobe::main, Lobe::side}) {
        const CumulantSet cs = cumulants(at(alpha, bs), g, lobe);
        for (int n = 1; n <= 4; ++n) CHECK(cs.k[n] > 0.0);
        CHECK(cs.skewness > 0.0);
        CHECK(cs.excess_kurtosis > 0.0);
      }
    }
  }
}

TEST_CASE("threshold verdict is strict") {
  CumulantSet cs;
  cs.lobe = Lobe::side;
  cs.mean = 1.3;
  cs.std = 0.1;
  ThresholdVerdict v = threshold_verdict(cs, 1.3);
  CHECK_FALSE(v.mean_exceeds);
  CHECK(v.threshold == 1.3);
  CHECK(v.lobe == Lobe::side);
  cs.mean = std::nextafter(1.3, 2.0);
  CHECK(threshold_verdict(cs, 1.3).mean_exceeds);
  cs.mean = 0.80;
  CHECK_FALSE(threshold_verdict(cs, 1.3).mean_exceeds);
  cs.mean = 1.61;
  CHECK(threshold_verdict(cs, 1.3).mean_exceeds);
}
