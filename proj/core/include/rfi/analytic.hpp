#pragma once

#include <functional>
#include <vector>

#include "rfi/geometry.hpp"
#include "rfi/scenario.hpp"

namespace rfi {

/// Cumulants k[1..max_order] of an RFI brightness temperature (kelvin^n)
/// with the moments derived from the first four. k[0] is unused and zero.
struct CumulantSet {
  Lobe lobe = Lobe::main;
  std::vector<double> k;
  double mean = 0.0;
  double variance = 0.0;
  double std = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double mu4 = 0.0;  // fourth central moment, k4 + 3 k2^2
};

struct ThresholdVerdict {
  Lobe lobe = Lobe::main;
  double mean = 0.0;
  double std = 0.0;
  double threshold = 0.0;
  bool mean_exceeds = false;  // strictly mean > threshold
};

struct MgfOptions {
  /// Largest natural-log exponent tolerated before reporting mgf_overflow.
  double exponent_cap = 700.0;
};

/// Worst-case temperature from one base station at distance x:
/// g eta (omega / x)^alpha, with g the gain of `lobe`.
[[nodiscard]] double t_cluster_unit(const Scenario& s, Lobe lobe, double x);

/// Log-MGF of one cluster, lambda_bs (exp(g eta omega^alpha x^-alpha t) - 1).
[[nodiscard]] double cgf_cluster(const Scenario& s, double x, double gain, double t,
                                 const MgfOptions& opt = {});
/// MGF of one cluster of Poisson(lambda_bs) co-located base stations.
[[nodiscard]] double mgf_cluster(const Scenario& s, double x, double gain, double t,
                                 const MgfOptions& opt = {});

/// Power series of mgf_cluster truncated after `order` (<= kMaxExactOrder).
[[nodiscard]] double mgf_cluster_series(const Scenario& s, double x, double gain, double t,
                                        int order);

[[nodiscard]] double cgf_main_lobe(const Scenario& s, const GeometrySummary& geo, double t,
                                   const MgfOptions& opt = {});
[[nodiscard]] double mgf_main_lobe(const Scenario& s, const GeometrySummary& geo, double t,
                                   const MgfOptions& opt = {});

/// Side-lobe log-MGF via the point-process generating functional over the
/// whole cap, integrated with adaptive Gauss-Kronrod to `rel_tol`.
[[nodiscard]] double cgf_side_lobe(const Scenario& s, const GeometrySummary& geo, double t,
                                   double rel_tol = 1e-10, const MgfOptions& opt = {});
[[nodiscard]] double mgf_side_lobe(const Scenario& s, const GeometrySummary& geo, double t,
                                   double rel_tol = 1e-10, const MgfOptions& opt = {});

/// Closed-form main-lobe cumulants k_n = Lambda p_n(lambda_bs) (g eta (omega/d_ml)^alpha)^n.
[[nodiscard]] CumulantSet cumulants_main_lobe(const Scenario& s, const GeometrySummary& geo,
                                              int max_order = 4);
/// Closed-form side-lobe cumulants (radial integral of the per-cluster
/// cumulants over [d_min, d_max]). Requires alpha > 2.
[[nodiscard]] CumulantSet cumulants_side_lobe(const Scenario& s, const GeometrySummary& geo,
                                              int max_order = 4);
[[nodiscard]] CumulantSet cumulants(const Scenario& s, const GeometrySummary& geo, Lobe lobe,
                                    int max_order = 4);

[[nodiscard]] ThresholdVerdict threshold_verdict(const CumulantSet& cs, double tau);

/// Central finite-difference derivatives of log(mgf) at 0, orders 1..order
/// (order <= 4). The step is eps^(1/(order+2)) / scale where scale is the
/// expected magnitude of the mean. Result index n holds k_n; index 0 is 0.
[[nodiscard]] std::vector<double> cgf_numeric_cumulants(const std::function<double(double)>& mgf,
                                                        int order, double scale);

/// As cgf_numeric_cumulants but takes the log-MGF directly, which avoids
/// the absolute rounding floor of log(1 + small).
[[nodiscard]] std::vector<double> numeric_cumulants_from_cgf(
    const std::function<double(double)>& cgf, int order, double scale);

}  // namespace rfi
