#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace rfi {

enum class Lobe { main, side };

[[nodiscard]] std::string_view to_string(Lobe lobe) noexcept;
/// Accepts "main" or "side"; throws ConfigError("invalid_lobe") otherwise.
[[nodiscard]] Lobe parse_lobe(std::string_view text);

/// Two-level sectorized antenna gain. Gains are linear power ratios.
struct GainModel {
  double main_lobe_gain = 1.0;
  double side_lobe_gain = 3.1622776601683795e-06;  // -55 dB
  double half_beamwidth = 0.020943951023931952;    // 1.2 deg
};

/// Full parameter set of a run, in SI base units throughout
/// (m, m^2, Hz, W, K, rad). Defaults reproduce the reference SMAP /
/// L-band scenario; path_loss_exponent defaults to 2.0001, the
/// closest-to-free-space point of the (2, 2.2] range.
struct Scenario {
  double cluster_intensity = 1.0e-10;  // clusters per m^2 (1 per 10^4 km^2)
  double bs_intensity = 100.0;         // Poisson mean of BSs per cluster
  double path_loss_exponent = 2.0001;
  double tx_power = 3.5;               // W
  double carrier_frequency = 1.413e9;  // Hz
  double bandwidth = 24.0e6;           // Hz
  double light_speed = 3.0e8;          // m/s
  double boltzmann = 1.380649e-23;     // J/K
  double earth_radius = 6.371e6;       // m
  double sat_center_distance = 7.056e6;  // m, satellite to Earth center
  double incidence_angle = 0.69813170079773179;  // 40 deg
  double footprint_area = 1.6e9;       // m^2, (40 km)^2
  GainModel gain{};
  double rfi_threshold = 1.3;          // K
};

/// Reference scenario with every field at its default.
[[nodiscard]] Scenario default_scenario();

/// Throws ConfigError for non-finite or non-positive physical quantities,
/// negative intensities, h <= r_e and bad angles; DomainError
/// "alpha_out_of_range" when path_loss_exponent <= 2.
void validate(const Scenario& s);

/// Parse a JSON scenario document (sections network/satellite/physics/gain,
/// unit-suffixed keys). Omitted fields take their defaults. The result is
/// validated before being returned.
[[nodiscard]] Scenario load_scenario(std::string_view document);
[[nodiscard]] Scenario load_scenario_file(const std::filesystem::path& path);

/// Serialize using SI-suffixed keys only (_m, _hz, _linear, _rad, ...).
/// load_scenario(to_si_document(s)) reproduces s.
[[nodiscard]] std::string to_si_document(const Scenario& s);

/// eta = p_tx / (k_b * beta), kelvin.
[[nodiscard]] double eta(const Scenario& s) noexcept;
/// omega = c / (4 pi f), meters.
[[nodiscard]] double omega(const Scenario& s) noexcept;

/// Main-lobe gain when |deviation| <= half_beamwidth (inclusive), side-lobe
/// gain otherwise.
[[nodiscard]] double antenna_gain(const GainModel& gm, double deviation) noexcept;

[[nodiscard]] double lobe_gain(const Scenario& s, Lobe lobe) noexcept;

/// Nyquist conversion P / (k_b * beta). Negative power throws DomainError.
[[nodiscard]] double power_to_temperature(const Scenario& s, double power);

[[nodiscard]] double db_to_linear(double db) noexcept;
[[nodiscard]] double deg_to_rad(double deg) noexcept;

}  // namespace rfi
