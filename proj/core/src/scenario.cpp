#include "rfi/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "rfi/error.hpp"

namespace rfi {

namespace {

using json = nlohmann::json;

struct Unit {
  std::string_view suffix;  // empty for dimensionless keys
  double (*to_si)(double);
};

double same(double v) { return v; }
double times_1e3(double v) { return v * 1e3; }
double times_1e6(double v) { return v * 1e6; }
double times_1e9(double v) { return v * 1e9; }
double times_1em3(double v) { return v * 1e-3; }
double times_1em6(double v) { return v * 1e-6; }
double from_db(double v) { return db_to_linear(v); }
double from_deg(double v) { return deg_to_rad(v); }

struct Field {
  std::string_view section;
  std::string_view name;
  std::vector<Unit> units;  // units.front() is the SI form
  double& (*slot)(Scenario&);
};

// Each entry lists the accepted unit suffixes; the first one is SI.
const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      {"network", "cluster_intensity",
       {{"per_m2", same}, {"per_km2", times_1em6}},
       [](Scenario& s) -> double& { return s.cluster_intensity; }},
      {"network", "bs_intensity", {{"", same}},
       [](Scenario& s) -> double& { return s.bs_intensity; }},
      {"network", "path_loss_exponent", {{"", same}},
       [](Scenario& s) -> double& { return s.path_loss_exponent; }},
      {"network", "tx_power", {{"w", same}, {"mw", times_1em3}},
       [](Scenario& s) -> double& { return s.tx_power; }},
      {"network", "carrier_frequency",
       {{"hz", same}, {"mhz", times_1e6}, {"ghz", times_1e9}},
       [](Scenario& s) -> double& { return s.carrier_frequency; }},
      {"network", "bandwidth",
       {{"hz", same}, {"khz", times_1e3}, {"mhz", times_1e6}},
       [](Scenario& s) -> double& { return s.bandwidth; }},
      {"satellite", "earth_radius", {{"m", same}, {"km", times_1e3}},
       [](Scenario& s) -> double& { return s.earth_radius; }},
      {"satellite", "sat_center_distance", {{"m", same}, {"km", times_1e3}},
       [](Scenario& s) -> double& { return s.sat_center_distance; }},
      {"satellite", "incidence_angle", {{"rad", same}, {"deg", from_deg}},
       [](Scenario& s) -> double& { return s.incidence_angle; }},
      {"satellite", "footprint_area", {{"m2", same}, {"km2", times_1e6}},
       [](Scenario& s) -> double& { return s.footprint_area; }},
      {"satellite", "rfi_threshold", {{"k", same}},
       [](Scenario& s) -> double& { return s.rfi_threshold; }},
      {"physics", "light_speed",
       {{"m_per_s", same}, {"km_per_s", times_1e3}},
       [](Scenario& s) -> double& { return s.light_speed; }},
      {"physics", "boltzmann", {{"j_per_k", same}},
       [](Scenario& s) -> double& { return s.boltzmann; }},
      {"gain", "main_lobe_gain", {{"linear", same}, {"db", from_db}},
       [](Scenario& s) -> double& { return s.gain.main_lobe_gain; }},
      {"gain", "side_lobe_gain", {{"linear", same}, {"db", from_db}},
       [](Scenario& s) -> double& { return s.gain.side_lobe_gain; }},
      {"gain", "half_beamwidth", {{"rad", same}, {"deg", from_deg}},
       [](Scenario& s) -> double& { return s.gain.half_beamwidth; }},
  };
  return table;
}

std::string key_for(const Field& f, const Unit& u) {
  std::string key(f.name);
  if (!u.suffix.empty()) {
    key += '_';
    key += u.suffix;
  }
  return key;
}

struct KeyTarget {
  const Field* field;
  const Unit* unit;
};

const std::map<std::string, KeyTarget, std::less<>>& key_index(std::string_view section) {
  static const auto index = [] {
    std::map<std::string, std::map<std::string, KeyTarget, std::less<>>, std::less<>> idx;
    for (const Field& f : fields()) {
      for (const Unit& u : f.units) {
        idx[std::string(f.section)][key_for(f, u)] = KeyTarget{&f, &u};
      }
    }
    return idx;
  }();
  static const std::map<std::string, KeyTarget, std::less<>> empty;
  auto it = index.find(section);
  return it == index.end() ? empty : it->second;
}

void require_positive(double v, std::string_view what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw ConfigError("non_positive", std::string(what) + " must be finite and > 0");
  }
}

}  // namespace

std::string_view to_string(Lobe lobe) noexcept {
  return lobe == Lobe::main ? "main" : "side";
}

Lobe parse_lobe(std::string_view text) {
  if (text == "main") return Lobe::main;
  if (text == "side") return Lobe::side;
  throw ConfigError("invalid_lobe", "expected 'main' or 'side', got '" + std::string(text) + "'");
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double deg_to_rad(double deg) noexcept { return deg * std::numbers::pi / 180.0; }

Scenario default_scenario() { return Scenario{}; }

void validate(const Scenario& s) {
  if (!std::isfinite(s.cluster_intensity) || s.cluster_intensity < 0.0) {
    throw ConfigError("non_positive", "cluster_intensity must be finite and >= 0");
  }
  if (!std::isfinite(s.bs_intensity) || s.bs_intensity < 0.0) {
    throw ConfigError("non_positive", "bs_intensity must be finite and >= 0");
  }
  require_positive(s.tx_power, "tx_power");
  require_positive(s.carrier_frequency, "carrier_frequency");
  require_positive(s.bandwidth, "bandwidth");
  require_positive(s.light_speed, "light_speed");
  require_positive(s.boltzmann, "boltzmann");
  require_positive(s.earth_radius, "earth_radius");
  require_positive(s.sat_center_distance, "sat_center_distance");
  require_positive(s.incidence_angle, "incidence_angle");
  require_positive(s.footprint_area, "footprint_area");
  require_positive(s.rfi_threshold, "rfi_threshold");
  require_positive(s.gain.main_lobe_gain, "main_lobe_gain");
  require_positive(s.gain.side_lobe_gain, "side_lobe_gain");
  require_positive(s.gain.half_beamwidth, "half_beamwidth");

  if (s.sat_center_distance <= s.earth_radius) {
    throw ConfigError("satellite_below_surface",
                      "sat_center_distance must exceed earth_radius");
  }
  if (s.gain.half_beamwidth >= std::numbers::pi / 2) {
    throw ConfigError("angle_out_of_range", "half_beamwidth must lie in (0, pi/2)");
  }
  if (s.incidence_angle >= std::numbers::pi / 2) {
    throw ConfigError("angle_out_of_range", "incidence_angle must lie in (0, pi/2)");
  }
  const double e = eta(s);
  if (!std::isfinite(e) || e <= 0.0) {
    throw ConfigError("non_positive", "p_tx / (k_b beta) is not finite and positive");
  }
  if (!std::isfinite(s.path_loss_exponent) || s.path_loss_exponent <= 2.0) {
    throw DomainError("alpha_out_of_range",
                      "path_loss_exponent must be > 2, got " +
                          std::to_string(s.path_loss_exponent));
  }
}

Scenario load_scenario(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed_document", e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("malformed_document", "top level must be an object");
  }

  Scenario s = default_scenario();
  std::map<const Field*, std::string> seen;
  for (const auto& [section, body] : doc.items()) {
    const auto& index = key_index(section);
    if (index.empty()) {
      throw ConfigError("unknown_field", "unknown section '" + section + "'");
    }
    if (!body.is_object()) {
      throw ConfigError("malformed_document", "section '" + section + "' must be an object");
    }
    for (const auto& [key, value] : body.items()) {
      auto it = index.find(key);
      if (it == index.end()) {
        throw ConfigError("unknown_field", "unknown key '" + section + "." + key + "'");
      }
      if (!value.is_number()) {
        throw ConfigError("malformed_document",
                          "'" + section + "." + key + "' must be a number");
      }
      const auto [field, unit] = it->second;
      if (auto prev = seen.find(field); prev != seen.end()) {
        throw ConfigError("conflicting_units", "'" + section + "." + key + "' and '" +
                                                   section + "." + prev->second +
                                                   "' set the same quantity");
      }
      seen.emplace(field, key);
      field->slot(s) = unit->to_si(value.get<double>());
    }
  }
  validate(s);
  return s;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("io_error", "cannot read scenario file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

std::string to_si_document(const Scenario& s) {
  json doc = json::object();
  Scenario copy = s;
  for (const Field& f : fields()) {
    doc[std::string(f.section)][key_for(f, f.units.front())] = f.slot(copy);
  }
  return doc.dump(2);
}

double eta(const Scenario& s) noexcept { return s.tx_power / (s.boltzmann * s.bandwidth); }

double omega(const Scenario& s) noexcept {
  return s.light_speed / (4.0 * std::numbers::pi * s.carrier_frequency);
}

double antenna_gain(const GainModel& gm, double deviation) noexcept {
  return std::abs(deviation) <= gm.half_beamwidth ? gm.main_lobe_gain : gm.side_lobe_gain;
}

double lobe_gain(const Scenario& s, Lobe lobe) noexcept {
  return lobe == Lobe::main ? s.gain.main_lobe_gain : s.gain.side_lobe_gain;
}

double power_to_temperature(const Scenario& s, double power) {
  if (!(power >= 0.0)) {
    throw DomainError("negative_power", "received power must be >= 0");
  }
  return power / (s.boltzmann * s.bandwidth);
}

}  // namespace rfi
