#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rfi/montecarlo.hpp"
#include "rfi/scenario.hpp"

namespace rfi::cli {

inline constexpr std::string_view kCsvHeader =
    "alpha,lambda_bs,lobe,mean_K,std_K,skewness,excess_kurtosis,exceeds_tau,"
    "mc_mean_K,mc_se_mean_K,mc_std_K";

struct SweepSpec {
  std::vector<double> alpha_grid;
  std::vector<double> bs_intensities{50.0, 100.0, 200.0};
  std::vector<Lobe> lobes{Lobe::main, Lobe::side};
  bool with_mc = false;
  McConfig mc{20000, 42, 1};
  double alpha_lower = 2.0;  // exclusive
  double alpha_upper = 2.2;  // inclusive
};

/// `points` values evenly spaced on (lo, hi]: lo + k (hi - lo) / points, k = 1..points.
std::vector<double> open_closed_grid(double lo, double hi, int points);

/// 40 points on (2.005, 2.2].
std::vector<double> default_alpha_grid();

SweepSpec default_sweep_spec();

/// Parses a sweep-spec JSON document; omitted keys take defaults. Throws
/// ConfigError("empty_grid") for empty lists and DomainError for alpha <= 2.
SweepSpec load_sweep_spec(std::string_view document);
SweepSpec load_sweep_spec_file(const std::filesystem::path& path);
void validate(const SweepSpec& spec);

struct SweepRow {
  double alpha = 0.0;
  double lambda_bs = 0.0;
  Lobe lobe = Lobe::main;
  double mean_k = 0.0;
  double std_k = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  bool exceeds_tau = false;
  std::optional<double> mc_mean;
  std::optional<double> mc_se_mean;
  std::optional<double> mc_std;
};

/// Rows ordered by lobe, then lambda_bs, then alpha (spec order), regardless
/// of how many workers evaluate them.
std::vector<SweepRow> run_sweep(const Scenario& s, const SweepSpec& spec, unsigned workers);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Per-curve min/max mean and whether the mean decreases along alpha.
nlohmann::json sweep_summary(const std::vector<SweepRow>& rows);

/// Mean and STD versus alpha, one polyline per lambda_bs, one panel per
/// (lobe, statistic).
void write_svg(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace rfi::cli
