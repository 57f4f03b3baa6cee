#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "rfi/analytic.hpp"
#include "rfi/error.hpp"
#include "rfi/geometry.hpp"

namespace rfi::cli {

namespace {

using nlohmann::json;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::vector<double> number_list(const json& j, const char* key) {
  if (!j.is_array()) throw ConfigError("malformed_document", std::string(key) + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw ConfigError("malformed_document", std::string(key) + " must hold numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::vector<double> open_closed_grid(double lo, double hi, int points) {
  std::vector<double> grid;
  if (points <= 0) return grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int k = 1; k <= points; ++k) grid.push_back(lo + k * (hi - lo) / points);
  return grid;
}

std::vector<double> default_alpha_grid() { return open_closed_grid(2.005, 2.2, 40); }

SweepSpec default_sweep_spec() {
  SweepSpec spec;
  spec.alpha_grid = default_alpha_grid();
  return spec;
}

void validate(const SweepSpec& spec) {
  if (spec.alpha_grid.empty()) throw ConfigError("empty_grid", "alpha grid is empty");
  if (spec.bs_intensities.empty()) throw ConfigError("empty_grid", "bs_intensities is empty");
  if (spec.lobes.empty()) throw ConfigError("empty_grid", "lobes is empty");
  for (double a : spec.alpha_grid) {
    if (!(a > 2.0)) {
      throw DomainError("alpha_out_of_range", "alpha grid value " + fmt("%.10g", a) + " <= 2");
    }
    if (!(a > spec.alpha_lower) || a > spec.alpha_upper) {
      throw ConfigError("alpha_outside_bounds", "alpha grid value " + fmt("%.10g", a) +
                                                    " outside the configured bounds");
    }
  }
  for (double l : spec.bs_intensities) {
    if (!(l >= 0.0) || !std::isfinite(l)) {
      throw ConfigError("non_positive", "bs_intensities must be finite and >= 0");
    }
  }
  if (spec.with_mc && spec.mc.trials < 2) {
    throw DomainError("insufficient_trials_for_variance", "with_mc needs at least 2 trials");
  }
}

SweepSpec load_sweep_spec(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed_document", e.what());
  }
  if (!doc.is_object()) throw ConfigError("malformed_document", "sweep spec must be an object");

  SweepSpec spec = default_sweep_spec();
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "alpha_grid") {
        spec.alpha_grid = number_list(value, "alpha_grid");
      } else if (key == "alpha_range") {
        spec.alpha_grid = open_closed_grid(value.value("min", 2.005), value.value("max", 2.2),
                                           value.value("points", 40));
      } else if (key == "alpha_bounds") {
        spec.alpha_lower = value.value("lower", spec.alpha_lower);
        spec.alpha_upper = value.value("upper", spec.alpha_upper);
      } else if (key == "bs_intensities") {
        spec.bs_intensities = number_list(value, "bs_intensities");
      } else if (key == "lobes") {
        spec.lobes.clear();
        for (const auto& l : value) spec.lobes.push_back(parse_lobe(l.get<std::string>()));
      } else if (key == "with_mc") {
        spec.with_mc = value.get<bool>();
      } else if (key == "mc") {
        spec.mc.trials = value.value("trials", spec.mc.trials);
        spec.mc.seed = value.value("seed", spec.mc.seed);
        spec.mc.workers = value.value("workers", spec.mc.workers);
      } else {
        throw ConfigError("unknown_field", "unknown sweep-spec key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError("malformed_document", e.what());
  }
  validate(spec);
  return spec;
}

SweepSpec load_sweep_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("io_error", "cannot read sweep spec '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_sweep_spec(buf.str());
}

std::vector<SweepRow> run_sweep(const Scenario& s, const SweepSpec& spec, unsigned workers) {
  validate(spec);
  const GeometrySummary geo = derive_geometry(s);

  std::vector<SweepRow> rows;
  for (Lobe lobe : spec.lobes) {
    for (double l : spec.bs_intensities) {
      for (double a : spec.alpha_grid) {
        SweepRow row;
        row.lobe = lobe;
        row.lambda_bs = l;
        row.alpha = a;
        rows.push_back(row);
      }
    }
  }

  // Closed forms are cheap; spread rows over workers and write back by index.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      SweepRow& row = rows[i];
      Scenario point = s;
      point.path_loss_exponent = row.alpha;
      point.bs_intensity = row.lambda_bs;
      const CumulantSet cs = cumulants(point, geo, row.lobe);
      row.mean_k = cs.mean;
      row.std_k = cs.std;
      row.skewness = cs.skewness;
      row.excess_kurtosis = cs.excess_kurtosis;
      row.exceeds_tau = threshold_verdict(cs, s.rfi_threshold).mean_exceeds;
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
    for (unsigned w = 1; w < n; ++w) pool.emplace_back(work);
    work();
  }

  if (spec.with_mc) {
    McConfig mc = spec.mc;
    mc.workers = std::max(mc.workers, workers);
    std::size_t i = 0;
    for (Lobe lobe : spec.lobes) {
      const GridEstimate grid =
          estimate_grid(s, geo, lobe, spec.alpha_grid, spec.bs_intensities, mc);
      for (std::size_t li = 0; li < spec.bs_intensities.size(); ++li) {
        for (std::size_t ai = 0; ai < spec.alpha_grid.size(); ++ai, ++i) {
          const McEstimate& e = grid.at(ai, li);
          rows[i].mc_mean = e.mean;
          rows[i].mc_se_mean = e.se_mean;
          rows[i].mc_std = std::sqrt(e.variance);
        }
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? fmt("%.6g", *v) : std::string(); };
  for (const SweepRow& r : rows) {
    out << fmt("%.10g", r.alpha) << ',' << fmt("%.10g", r.lambda_bs) << ',' << to_string(r.lobe)
        << ',' << fmt("%.6g", r.mean_k) << ',' << fmt("%.6g", r.std_k) << ','
        << fmt("%.6g", r.skewness) << ',' << fmt("%.6g", r.excess_kurtosis) << ','
        << (r.exceeds_tau ? "true" : "false") << ',' << opt(r.mc_mean) << ','
        << opt(r.mc_se_mean) << ',' << opt(r.mc_std) << '\n';
  }
}

json sweep_summary(const std::vector<SweepRow>& rows) {
  json curves = json::array();
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    double lo = rows[i].mean_k;
    double hi = rows[i].mean_k;
    bool decreasing = true;
    bool any_exceeds = false;
    for (; j < rows.size() && rows[j].lobe == rows[i].lobe && rows[j].lambda_bs == rows[i].lambda_bs;
         ++j) {
      lo = std::min(lo, rows[j].mean_k);
      hi = std::max(hi, rows[j].mean_k);
      any_exceeds = any_exceeds || rows[j].exceeds_tau;
      if (j > i && rows[j].alpha > rows[j - 1].alpha && !(rows[j].mean_k < rows[j - 1].mean_k)) {
        decreasing = false;
      }
    }
    curves.push_back({{"lobe", std::string(to_string(rows[i].lobe))},
                      {"lambda_bs", rows[i].lambda_bs},
                      {"points", j - i},
                      {"min_mean_K", lo},
                      {"max_mean_K", hi},
                      {"mean_decreasing_in_alpha", decreasing},
                      {"any_exceeds_tau", any_exceeds}});
    i = j;
  }
  return json{{"rows", rows.size()}, {"curves", curves}};
}

void write_svg(std::ostream& out, const std::vector<SweepRow>& rows) {
  constexpr double kPanelW = 420.0;
  constexpr double kPanelH = 300.0;
  constexpr double kMargin = 50.0;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  // (lobe, statistic) -> lambda_bs -> points
  std::map<std::pair<int, int>, std::map<double, std::vector<std::pair<double, double>>>> panels;
  for (const SweepRow& r : rows) {
    const int lobe = r.lobe == Lobe::main ? 0 : 1;
    panels[{lobe, 0}][r.lambda_bs].emplace_back(r.alpha, r.mean_k);
    panels[{lobe, 1}][r.lambda_bs].emplace_back(r.alpha, r.std_k);
  }
  int panel_rows = 0;
  for (const auto& [key, _] : panels) panel_rows = std::max(panel_rows, key.first + 1);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * kPanelW << "\" height=\""
      << panel_rows * kPanelH << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (const auto& [key, curves] : panels) {
    const double x0 = key.second * kPanelW;
    const double y0 = key.first * kPanelH;
    double amin = 1e300, amax = -1e300, vmin = 1e300, vmax = -1e300;
    for (const auto& [_, pts] : curves) {
      for (auto [a, v] : pts) {
        amin = std::min(amin, a);
        amax = std::max(amax, a);
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
      }
    }
    if (amax <= amin) amax = amin + 1.0;
    if (vmax <= vmin) vmax = vmin + 1.0;
    const double w = kPanelW - 2 * kMargin;
    const double h = kPanelH - 2 * kMargin;
    auto px = [&](double a) { return x0 + kMargin + (a - amin) / (amax - amin) * w; };
    auto py = [&](double v) { return y0 + kMargin + (1.0 - (v - vmin) / (vmax - vmin)) * h; };

    const char* lobe = key.first == 0 ? "main" : "side";
    const char* stat = key.second == 0 ? "mean" : "STD";
    out << "<text x=\"" << x0 + kMargin << "\" y=\"" << y0 + 20 << "\">" << lobe << "-lobe "
        << stat << " [K] vs alpha</text>\n";
    out << "<rect x=\"" << x0 + kMargin << "\" y=\"" << y0 + kMargin << "\" width=\"" << w
        << "\" height=\"" << h << "\" fill=\"none\" stroke=\"#999\"/>\n";
    out << "<text x=\"" << x0 + 4 << "\" y=\"" << y0 + kMargin + 4 << "\">" << fmt("%.3g", vmax)
        << "</text>\n";
    out << "<text x=\"" << x0 + 4 << "\" y=\"" << y0 + kMargin + h << "\">" << fmt("%.3g", vmin)
        << "</text>\n";
    out << "<text x=\"" << x0 + kMargin << "\" y=\"" << y0 + kMargin + h + 15 << "\">"
        << fmt("%.4g", amin) << "</text>\n";
    out << "<text x=\"" << x0 + kMargin + w - 30 << "\" y=\"" << y0 + kMargin + h + 15 << "\">"
        << fmt("%.4g", amax) << "</text>\n";
    int c = 0;
    for (const auto& [lambda, pts] : curves) {
      const char* color = kColors[c % 5];
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
      for (auto [a, v] : pts) out << fmt("%.2f", px(a)) << ',' << fmt("%.2f", py(v)) << ' ';
      out << "\"/>\n";
      out << "<text x=\"" << x0 + kMargin + w - 90 << "\" y=\"" << y0 + kMargin + 15 + 14 * c
          << "\" fill=\"" << color << "\">lambda_bs=" << fmt("%g", lambda) << "</text>\n";
      ++c;
    }
  }
  out << "</svg>\n";
}

}  // namespace rfi::cli
