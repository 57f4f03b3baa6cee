#include "report.hpp"

#include <cmath>
#include <string>

namespace rfi::cli {

using nlohmann::json;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const GeometrySummary& g) {
  return json{
      {"d_min_m", g.d_min},
      {"d_max_m", g.d_max},
      {"d_ml_m", g.d_ml},
      {"cap_area_m2", g.cap_area},
      {"footprint_area_m2", g.footprint_area},
      {"lambda_ml", g.lambda_ml},
      {"lambda_cap", g.lambda_cap},
      {"cos_theta_max", g.cos_theta_max},
  };
}

json to_json(const CumulantSet& cs, const ThresholdVerdict& verdict) {
  json k = json::array();
  for (std::size_t n = 1; n < cs.k.size(); ++n) k.push_back(finite_or_null(cs.k[n]));
  return json{
      {"lobe", std::string(to_string(cs.lobe))},
      {"cumulants", k},
      {"mean_K", finite_or_null(cs.mean)},
      {"variance_K2", finite_or_null(cs.variance)},
      {"std_K", finite_or_null(cs.std)},
      {"skewness", finite_or_null(cs.skewness)},
      {"excess_kurtosis", finite_or_null(cs.excess_kurtosis)},
      {"mu4_K4", finite_or_null(cs.mu4)},
      {"verdict",
       {{"threshold_K", verdict.threshold},
        {"mean_K", finite_or_null(verdict.mean)},
        {"std_K", finite_or_null(verdict.std)},
        {"mean_exceeds", verdict.mean_exceeds}}},
  };
}

json to_json(const McEstimate& e) {
  return json{
      {"lobe", std::string(to_string(e.lobe))},
      {"mean_K", finite_or_null(e.mean)},
      {"variance_K2", finite_or_null(e.variance)},
      {"std_K", finite_or_null(std::sqrt(e.variance))},
      {"skewness", finite_or_null(e.skewness)},
      {"excess_kurtosis", finite_or_null(e.excess_kurtosis)},
      {"se_mean_K", finite_or_null(e.se_mean)},
      {"se_variance_K2", finite_or_null(e.se_variance)},
      {"trials", e.trials},
      {"seed", e.seed},
      {"flags", e.flags},
  };
}

}  // namespace rfi::cli
