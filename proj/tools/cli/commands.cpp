#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "report.hpp"
#include "rfi/analytic.hpp"
#include "rfi/error.hpp"
#include "rfi/geometry.hpp"
#include "rfi/montecarlo.hpp"
#include "rfi/scenario.hpp"
#include "sweep.hpp"
#include "validate.hpp"

namespace rfi::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
  std::string scenario_path;
  std::string lobe = "both";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string out_path;
  std::string spec_path;
  bool svg = false;
  int max_order = 4;
};

Scenario resolve_scenario(const Options& opt) {
  if (!opt.scenario_path.empty()) return load_scenario_file(opt.scenario_path);
  if (const char* env = std::getenv(kScenarioEnvVar); env != nullptr && *env != '\0') {
    return load_scenario_file(env);
  }
  Scenario s = default_scenario();
  validate(s);
  return s;
}

std::vector<Lobe> resolve_lobes(const std::string& text) {
  if (text == "both") return {Lobe::main, Lobe::side};
  return {parse_lobe(text)};
}

int cmd_geometry(const Options& opt, std::ostream& out) {
  const Scenario s = resolve_scenario(opt);
  out << to_json(derive_geometry(s)).dump(2) << '\n';
  return kExitOk;
}

int cmd_analytic(const Options& opt, std::ostream& out) {
  const Scenario s = resolve_scenario(opt);
  const GeometrySummary geo = derive_geometry(s);
  json results = json::array();
  for (Lobe lobe : resolve_lobes(opt.lobe)) {
    const CumulantSet cs = cumulants(s, geo, lobe, opt.max_order);
    results.push_back(to_json(cs, threshold_verdict(cs, s.rfi_threshold)));
  }
  out << json{{"results", results}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
  const Scenario s = resolve_scenario(opt);
  if (opt.trials < 2) {
    throw DomainError("insufficient_trials_for_variance", "simulate needs at least 2 trials");
  }
  const GeometrySummary geo = derive_geometry(s);
  const McConfig cfg{opt.trials, opt.seed, opt.workers};
  json results = json::array();
  for (Lobe lobe : resolve_lobes(opt.lobe)) results.push_back(to_json(estimate(s, geo, lobe, cfg)));
  out << json{{"results", results}}.dump(2) << '\n';
  return kExitOk;
}

// Writes via a temporary sibling and renames, so a failed run leaves no
// partial file behind.
template <class Writer>
void write_atomically(const fs::path& path, Writer&& writer) {
  const fs::path tmp = path.string() + ".partial";
  try {
    {
      std::ofstream file(tmp);
      if (!file) throw ConfigError("io_error", "cannot write '" + tmp.string() + "'");
      writer(file);
      if (!file) throw ConfigError("io_error", "write to '" + tmp.string() + "' failed");
    }
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  const Scenario s = resolve_scenario(opt);
  SweepSpec spec = opt.spec_path.empty() ? default_sweep_spec() : load_sweep_spec_file(opt.spec_path);
  if (opt.lobe != "both") spec.lobes = resolve_lobes(opt.lobe);

  const std::vector<SweepRow> rows = run_sweep(s, spec, opt.workers);
  const fs::path csv_path = opt.out_path;
  write_atomically(csv_path, [&](std::ostream& f) { write_csv(f, rows); });

  json summary = sweep_summary(rows);
  summary["csv"] = csv_path.string();
  if (opt.svg) {
    fs::path svg_path = csv_path;
    svg_path.replace_extension(".svg");
    write_atomically(svg_path, [&](std::ostream& f) { write_svg(f, rows); });
    summary["svg"] = svg_path.string();
  }
  out << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const Scenario s = resolve_scenario(opt);
  if (opt.trials < 4) {
    throw DomainError("insufficient_trials_for_variance", "validate needs at least 4 trials");
  }
  const auto checks = run_validation(s, McConfig{opt.trials, opt.seed, opt.workers});
  std::size_t passed = 0;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  " << c.detail << '\n';
    passed += c.passed ? 1 : 0;
  }
  out << passed << '/' << checks.size() << " checks passed\n";
  return passed == checks.size() ? kExitOk : kExitValidationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Aggregate RFI statistics of clustered terrestrial networks at a satellite radiometer",
               "rfi-coexist"};
  app.require_subcommand(1);

  Options opt;
  auto add_scenario = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", opt.scenario_path,
                    std::string("Scenario JSON file (fallback: $") + kScenarioEnvVar + ")");
  };
  auto add_lobe = [&](CLI::App* cmd) {
    cmd->add_option("--lobe", opt.lobe, "main, side or both")
        ->check(CLI::IsMember({"main", "side", "both"}));
  };
  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", opt.workers, "Worker threads")->check(CLI::Range(1u, 4096u));
  };

  auto* geometry = app.add_subcommand("geometry", "Print derived cap geometry as JSON");
  add_scenario(geometry);

  auto* analytic = app.add_subcommand("analytic", "Closed-form cumulants and threshold verdicts");
  add_scenario(analytic);
  add_lobe(analytic);
  analytic->add_option("--max-order", opt.max_order, "Highest cumulant order (4..20)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the RFI statistics");
  add_scenario(simulate);
  add_lobe(simulate);
  simulate->add_option("--trials", opt.trials, "Independent realizations");
  simulate->add_option("--seed", opt.seed, "Master seed");
  add_workers(simulate);

  auto* sweep = app.add_subcommand("sweep", "Mean/STD versus path-loss exponent, CSV output");
  add_scenario(sweep);
  add_lobe(sweep);
  sweep->add_option("--spec", opt.spec_path, "Sweep spec JSON file");
  sweep->add_option("--out", opt.out_path, "Output CSV path")->required();
  sweep->add_flag("--svg", opt.svg, "Also write line charts next to the CSV");
  add_workers(sweep);

  auto* validate_cmd = app.add_subcommand("validate", "Analytic versus Monte Carlo checks");
  add_scenario(validate_cmd);
  validate_cmd->add_option("--trials", opt.trials, "Trials per lobe");
  validate_cmd->add_option("--seed", opt.seed, "Master seed");
  add_workers(validate_cmd);

  std::vector<const char*> argv{"rfi-coexist"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (geometry->parsed()) return cmd_geometry(opt, out);
    if (analytic->parsed()) return cmd_analytic(opt, out);
    if (simulate->parsed()) return cmd_simulate(opt, out);
    if (sweep->parsed()) return cmd_sweep(opt, out);
    if (validate_cmd->parsed()) return cmd_validate(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::config ? kExitConfigError : kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace rfi::cli
