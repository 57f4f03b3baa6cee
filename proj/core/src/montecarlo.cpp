#include "rfi/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "rfi/error.hpp"
#include "rfi/stats.hpp"

namespace rfi {

namespace {

constexpr std::uint64_t kBlockTrials = 1024;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Draws one realization for every (alpha, lambda_bs) cell at once.
class GridSampler {
 public:
  GridSampler(const Scenario& s, const GeometrySummary& geo, Lobe lobe,
              std::span<const double> alphas, std::span<const double> bs_intensities)
      : scenario_(s),
        geo_(geo),
        lobe_(lobe),
        alphas_(alphas.begin(), alphas.end()),
        lambdas_(bs_intensities.begin(), bs_intensities.end()),
        clusters_(lobe == Lobe::main ? geo.lambda_ml : geo.lambda_cap) {
    if (alphas_.empty() || lambdas_.empty()) {
      throw DomainError("empty_grid", "alpha and lambda_bs lists must be non-empty");
    }
    for (double a : alphas_) {
      if (!(a > 2.0)) throw DomainError("alpha_out_of_range", "path_loss_exponent must be > 2");
    }
    order_.resize(lambdas_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return lambdas_[x] < lambdas_[y]; });
    double prev = 0.0;
    for (std::size_t j : order_) {
      increments_.emplace_back(lambdas_[j] - prev);
      prev = lambdas_[j];
    }
    const double log_omega = std::log(omega(s));
    const double scale = lobe_gain(s, lobe) * eta(s);
    if (lobe == Lobe::main) {
      const double log_d = std::log(geo.d_ml);
      for (double a : alphas_) unit_main_.push_back(scale * std::exp(a * (log_omega - log_d)));
    }
    log_omega_ = log_omega;
    scale_ = scale;
    counts_.resize(lambdas_.size());
    totals_.resize(lambdas_.size());
  }

  [[nodiscard]] std::size_t cells() const noexcept { return alphas_.size() * lambdas_.size(); }

  // out[a * L + l]
  void sample(TrialRng& rng, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    const std::uint64_t m = clusters_(rng);
    if (lobe_ == Lobe::main) {
      sample_main(rng, m, out);
    } else {
      sample_side(rng, m, out);
    }
  }

  double sample_collapsed_main(TrialRng& rng) const {
    const PoissonSampler total(geo_.lambda_ml * lambdas_.front());
    return unit_main_.front() * static_cast<double>(total(rng));
  }

 private:
  // Fills counts_ (in lambda order) with one cluster's base-station counts.
  void draw_cluster_counts(TrialRng& rng) {
    std::uint64_t running = 0;
    for (std::size_t j = 0; j < order_.size(); ++j) {
      running += increments_[j](rng);
      counts_[order_[j]] = static_cast<double>(running);
    }
  }

  void sample_main(TrialRng& rng, std::uint64_t m, std::span<double> out) {
    const std::size_t nl = lambdas_.size();
    std::fill(totals_.begin(), totals_.end(), 0.0);
    for (std::uint64_t i = 0; i < m; ++i) {
      draw_cluster_counts(rng);
      for (std::size_t l = 0; l < nl; ++l) totals_[l] += counts_[l];
    }
    for (std::size_t a = 0; a < alphas_.size(); ++a) {
      for (std::size_t l = 0; l < nl; ++l) out[a * nl + l] = unit_main_[a] * totals_[l];
    }
  }

  void sample_side(TrialRng& rng, std::uint64_t m, std::span<double> out) {
    const std::size_t nl = lambdas_.size();
    for (std::uint64_t i = 0; i < m; ++i) {
      const double log_x = std::log(sample_cap_distance(scenario_, geo_, rng));
      draw_cluster_counts(rng);
      for (std::size_t a = 0; a < alphas_.size(); ++a) {
        const double path = std::exp(alphas_[a] * (log_omega_ - log_x));
        double* row = out.data() + a * nl;
        for (std::size_t l = 0; l < nl; ++l) row[l] += path * counts_[l];
      }
    }
    for (double& v : out) v *= scale_;
  }

  const Scenario& scenario_;
  const GeometrySummary& geo_;
  Lobe lobe_;
  std::vector<double> alphas_;
  std::vector<double> lambdas_;
  PoissonSampler clusters_;
  std::vector<std::size_t> order_;
  std::vector<PoissonSampler> increments_;
  std::vector<double> unit_main_;
  std::vector<double> counts_;
  std::vector<double> totals_;
  double log_omega_ = 0.0;
  double scale_ = 0.0;
};

McEstimate summarize(const MomentAccumulator& acc, Lobe lobe, const McConfig& cfg) {
  McEstimate e;
  e.lobe = lobe;
  e.trials = acc.count();
  e.seed = cfg.seed;
  e.mean = acc.mean();
  const double n = static_cast<double>(acc.count());
  if (acc.count() < 2) {
    e.variance = e.se_mean = e.se_variance = e.skewness = e.excess_kurtosis = kNaN;
    e.flags.emplace_back("insufficient_trials_for_variance");
    return e;
  }
  e.variance = acc.k2();
  e.se_mean = std::sqrt(e.variance / n);
  e.skewness = acc.k3() / std::pow(e.variance, 1.5);
  e.excess_kurtosis = acc.k4() / (e.variance * e.variance);
  if (acc.count() < 4) {
    e.se_variance = kNaN;
    e.flags.emplace_back("insufficient_trials_for_kurtosis");
  } else {
    // Large-sample variance of the sample variance.
    const double m4 = acc.central_moment(4);
    e.se_variance = std::sqrt((m4 - (n - 3.0) / (n - 1.0) * e.variance * e.variance) / n);
  }
  return e;
}

}  // namespace

double sample_main_lobe(const Scenario& s, const GeometrySummary& geo, TrialRng& rng) {
  const double a = s.path_loss_exponent;
  const double l = s.bs_intensity;
  GridSampler sampler(s, geo, Lobe::main, {&a, 1}, {&l, 1});
  double out = 0.0;
  sampler.sample(rng, {&out, 1});
  return out;
}

double sample_main_lobe_collapsed(const Scenario& s, const GeometrySummary& geo, TrialRng& rng) {
  const double a = s.path_loss_exponent;
  const double l = s.bs_intensity;
  const GridSampler sampler(s, geo, Lobe::main, {&a, 1}, {&l, 1});
  return sampler.sample_collapsed_main(rng);
}

double sample_cap_distance(const Scenario& s, const GeometrySummary& geo, TrialRng& rng) {
  const double c = geo.cos_theta_max;
  return distance_from_cos_polar(s, c + rng.uniform() * (1.0 - c));
}

double sample_side_lobe(const Scenario& s, const GeometrySummary& geo, TrialRng& rng) {
  const double a = s.path_loss_exponent;
  const double l = s.bs_intensity;
  GridSampler sampler(s, geo, Lobe::side, {&a, 1}, {&l, 1});
  double out = 0.0;
  sampler.sample(rng, {&out, 1});
  return out;
}

GridEstimate estimate_grid(const Scenario& s, const GeometrySummary& geo, Lobe lobe,
                           std::span<const double> alphas,
                           std::span<const double> bs_intensities, const McConfig& cfg) {
  if (cfg.trials == 0) {
    throw DomainError("invalid_trials", "trials must be >= 1");
  }
  // Validates the grid once up front so worker threads never throw.
  const std::size_t cells = GridSampler(s, geo, lobe, alphas, bs_intensities).cells();

  const std::uint64_t blocks = (cfg.trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<std::vector<MomentAccumulator>> partial(blocks,
                                                      std::vector<MomentAccumulator>(cells));
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    GridSampler sampler(s, geo, lobe, alphas, bs_intensities);
    std::vector<double> out(cells);
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t begin = b * kBlockTrials;
      const std::uint64_t end = std::min(cfg.trials, begin + kBlockTrials);
      auto& acc = partial[b];
      for (std::uint64_t trial = begin; trial < end; ++trial) {
        TrialRng rng(cfg.seed, trial);
        sampler.sample(rng, out);
        for (std::size_t c = 0; c < cells; ++c) acc[c].add(out[c]);
      }
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(cfg.workers, 1, blocks));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  std::vector<MomentAccumulator> total(cells);
  for (const auto& block : partial) {
    for (std::size_t c = 0; c < cells; ++c) total[c].merge(block[c]);
  }

  GridEstimate grid;
  grid.alphas.assign(alphas.begin(), alphas.end());
  grid.bs_intensities.assign(bs_intensities.begin(), bs_intensities.end());
  grid.cells.reserve(cells);
  for (const auto& acc : total) grid.cells.push_back(summarize(acc, lobe, cfg));
  return grid;
}

McEstimate estimate(const Scenario& s, const GeometrySummary& geo, Lobe lobe,
                    const McConfig& cfg) {
  const double a = s.path_loss_exponent;
  const double l = s.bs_intensity;
  return estimate_grid(s, geo, lobe, {&a, 1}, {&l, 1}, cfg).cells.front();
}

}  // namespace rfi
