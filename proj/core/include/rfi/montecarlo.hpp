#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rfi/geometry.hpp"
#include "rfi/rng.hpp"
#include "rfi/scenario.hpp"

namespace rfi {

struct McConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  unsigned workers = 1;
};

/// Sample statistics of simulated RFI temperatures. Skewness and excess
/// kurtosis come from k-statistics. Fields that need more trials than were
/// run are NaN and flagged.
struct McEstimate {
  Lobe lobe = Lobe::main;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double se_mean = 0.0;
  double se_variance = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> flags;  // e.g. "insufficient_trials_for_variance"
};

/// One realization of the main-lobe temperature: M ~ Poisson(Lambda)
/// clusters, each with N_i ~ Poisson(lambda_bs) base stations at d_ml.
[[nodiscard]] double sample_main_lobe(const Scenario& s, const GeometrySummary& geo,
                                      TrialRng& rng);

/// Same distribution drawn in one step: all clusters share d_ml, so the total
/// base-station count is Poisson(Lambda lambda_bs).
[[nodiscard]] double sample_main_lobe_collapsed(const Scenario& s, const GeometrySummary& geo,
                                                TrialRng& rng);

/// Distance to an area-uniform point on the exposed cap (cos(theta) uniform
/// on [r_e/h, 1]).
[[nodiscard]] double sample_cap_distance(const Scenario& s, const GeometrySummary& geo,
                                         TrialRng& rng);

/// One realization of the side-lobe temperature: M ~ Poisson(lambda_cap)
/// clusters placed uniformly on the whole cap, each with Poisson(lambda_bs)
/// co-located base stations.
[[nodiscard]] double sample_side_lobe(const Scenario& s, const GeometrySummary& geo,
                                      TrialRng& rng);

/// Runs cfg.trials independent realizations. Trial i uses TrialRng(seed, i);
/// partial sums are reduced in fixed blocks, so the result is bit-identical
/// for any worker count. Throws DomainError("invalid_trials") for trials = 0.
[[nodiscard]] McEstimate estimate(const Scenario& s, const GeometrySummary& geo, Lobe lobe,
                                  const McConfig& cfg);

/// Estimates for every (alpha, lambda_bs) pair from shared realizations.
/// Cluster positions are common to all cells; base-station counts for the
/// larger means are built from the smaller ones by adding independent
/// Poisson increments, so each cell still has the exact target law.
struct GridEstimate {
  std::vector<double> alphas;
  std::vector<double> bs_intensities;
  std::vector<McEstimate> cells;  // index: alpha_index * bs_intensities.size() + bs_index

  [[nodiscard]] const McEstimate& at(std::size_t alpha_index, std::size_t bs_index) const {
    return cells.at(alpha_index * bs_intensities.size() + bs_index);
  }
};

[[nodiscard]] GridEstimate estimate_grid(const Scenario& s, const GeometrySummary& geo, Lobe lobe,
                                         std::span<const double> alphas,
                                         std::span<const double> bs_intensities,
                                         const McConfig& cfg);

}  // namespace rfi
