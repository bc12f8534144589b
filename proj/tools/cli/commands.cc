// Copyright 2026 The riskdensity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "config_io.h"
#include "csv.h"
#include "riskdensity/bench.h"
#include "riskdensity/errors.h"
#include "svg.h"

namespace riskdensity::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string config;
  std::string out_dir = ".";
  std::optional<uint64_t> seed;
  std::optional<int64_t> trials;
  std::string cells;
  std::optional<int> waypoints;
  std::string methods;
  std::vector<std::string> emit{"csv"};
};

struct EstimateOptions {
  std::string method;
  std::string trajectory;
  double sigma = 0.0;
  std::optional<double> radius;
  std::string mode;
};

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

// Accepts plain numbers and powers of two written as 2^-9.
double ParseCellSize(const std::string& s) {
  if (s.rfind("2^", 0) == 0) {
    try {
      size_t used = 0;
      const int e = std::stoi(s.substr(2), &used);
      if (used == s.size() - 2) return std::ldexp(1.0, e);
    } catch (const std::exception&) {
    }
    throw UsageError("bad cell size '" + s + "'");
  }
  try {
    return ParseDouble(s);
  } catch (const std::exception&) {
    throw UsageError("bad cell size '" + s + "'");
  }
}

std::vector<std::string> EstimateMethods() {
  return {std::string(kMonteCarlo),  std::string(kParametrization),
          std::string(kVolterra),    std::string(kGrid),
          std::string(kStagewise),   std::string(kRiskDensity)};
}

BenchmarkConfig ResolveConfig(const CommonOptions& o) {
  BenchmarkConfig cfg = BenchmarkConfig::Default();
  if (!o.config.empty()) {
    if (!fs::exists(o.config)) {
      throw UsageError("config file not found: " + o.config);
    }
    cfg = LoadConfig(o.config);
  }
  if (o.seed) cfg.mc_seed = *o.seed;
  if (o.trials) cfg.mc_trials = *o.trials;
  if (o.waypoints) cfg.stagewise_n = *o.waypoints;
  if (!o.cells.empty()) {
    cfg.grid_cell_sizes.clear();
    for (const auto& c : SplitList(o.cells)) {
      cfg.grid_cell_sizes.push_back(ParseCellSize(c));
    }
  }
  try {
    cfg.Validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

std::vector<std::string> ResolveMethods(const std::string& list) {
  const auto requested = SplitList(list);
  const auto known = AvailableMethods();
  if (requested.empty() ||
      (requested.size() == 1 && requested[0] == "all")) {
    return known;
  }
  for (const auto& m : requested) {
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      throw UsageError("unknown method '" + m + "'; available: " +
                       Join(known));
    }
  }
  return requested;
}

bool WantsSvg(const CommonOptions& o) {
  for (const auto& e : o.emit) {
    for (const auto& item : SplitList(e)) {
      if (item == "svg") return true;
      if (item != "csv") throw UsageError("--emit takes csv or svg");
    }
  }
  return false;
}

fs::path PrepareOutDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory " + dir);
  }
  return fs::path(dir);
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::trunc);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

size_t FindTrajectory(const BenchmarkConfig& cfg, const std::string& key) {
  if (key.empty()) return 0;
  for (size_t i = 0; i < cfg.trajectories.size(); ++i) {
    if (cfg.trajectories[i].name() == key) return i;
  }
  try {
    size_t used = 0;
    const unsigned long idx = std::stoul(key, &used);
    if (used == key.size() && idx < cfg.trajectories.size()) return idx;
  } catch (const std::exception&) {
  }
  std::vector<std::string> names;
  for (const auto& t : cfg.trajectories) names.push_back(t.name());
  throw UsageError("unknown trajectory '" + key + "'; available: " +
                   Join(names));
}

json MetaJson(const Estimate& e) {
  json meta = json::object();
  for (const auto& [k, v] : e.meta) meta[k] = v;
  return meta;
}

int CmdEstimate(const CommonOptions& o, const EstimateOptions& eo,
                std::ostream& out, std::ostream& err) {
  const auto methods = EstimateMethods();
  if (std::find(methods.begin(), methods.end(), eo.method) == methods.end()) {
    err << "unknown method '" << eo.method << "'; available: "
        << Join(methods) << "\n";
    return kExitUsage;
  }
  const BenchmarkConfig cfg = ResolveConfig(o);
  const size_t ti = FindTrajectory(cfg, eo.trajectory);
  if (!(eo.sigma > 0.0)) throw UsageError("--sigma must be positive");
  Scenario sc = cfg.MakeScenario(ti, eo.sigma);
  if (eo.radius) sc = sc.WithRadius(*eo.radius);

  BoundMode mode = cfg.stagewise_mode;
  if (eo.mode == "center") {
    mode = BoundMode::kCenter;
  } else if (eo.mode == "max_point") {
    mode = BoundMode::kMaxPoint;
  } else if (!eo.mode.empty()) {
    throw UsageError("--mode takes center or max_point");
  }

  Estimate e;
  if (eo.method == kMonteCarlo) {
    e = MonteCarloGroundTruth(sc, cfg.monte_carlo_options());
  } else if (eo.method == kParametrization) {
    e = NaiveParamH3(sc, cfg.quadrature);
  } else if (eo.method == kVolterra) {
    e = VolterraH2(sc, cfg.quadrature);
  } else if (eo.method == kGrid) {
    GridOptions g;
    g.cell_size = cfg.grid_cell_sizes.empty() ? g.cell_size
                                              : cfg.grid_cell_sizes.front();
    g.max_cells = cfg.grid_max_cells;
    e = GridEstimate(sc, g);
  } else if (eo.method == kStagewise) {
    e = StagewiseEstimate(sc, cfg.stagewise_n, mode);
  } else {
    e = RiskDensityEstimate(sc, 0.0, cfg.quadrature);
  }

  // Wall time stays out of the data line so repeated runs compare equal.
  json line = {{"method", e.method},
               {"trajectory", cfg.trajectories[ti].name()},
               {"sigma", eo.sigma},
               {"radius", sc.radius()},
               {"value", e.value},
               {"raw", e.raw},
               {"meta", MetaJson(e)}};
  out << line.dump() << "\n";
  err << e.method << " on " << cfg.trajectories[ti].name()
      << " (sigma=" << eo.sigma << ", r=" << sc.radius()
      << "): value " << std::setprecision(6) << e.value << ", raw " << e.raw
      << ", " << std::setprecision(3) << e.wall_time << " s\n";
  return kExitOk;
}

int CmdBench(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const auto methods = ResolveMethods(o.methods);
  const bool svg = WantsSvg(o);
  const BenchmarkConfig cfg = ResolveConfig(o);
  const fs::path dir = PrepareOutDir(o.out_dir);

  const BenchmarkResult res = RunBenchmark(cfg, methods);
  const Eigen::MatrixXd& truth = res.ground_truth.values;

  CsvTable summary;
  summary.header = {"method", "frobenius", "max_abs", "seconds"};
  int failed_cells = 0;
  std::vector<const MethodResult*> all{&res.ground_truth};
  for (const auto& m : res.methods) all.push_back(&m);
  for (const MethodResult* m : all) {
    const ErrorMetrics em = ComputeErrorMetrics(truth, m->values, m->method);
    WriteCsv((dir / ("values_" + m->method + ".csv")).string(),
             ValuesTable(*m, res.trajectory_names, res.sigmas));
    WriteCsv((dir / ("errors_" + m->method + ".csv")).string(),
             ErrorsTable(em, res.trajectory_names, res.sigmas));
    WriteCsv((dir / ("heatmap_" + m->method + ".csv")).string(),
             HeatmapTable(m->values, res.trajectory_names, res.sigmas));
    if (svg) {
      WriteText(dir / ("heatmap_" + m->method + ".svg"),
                RenderHeatmapSvg(m->method, res.trajectory_names, res.sigmas,
                                 m->values, ColorScale::kProbability));
      WriteText(dir / ("errors_" + m->method + ".svg"),
                RenderHeatmapSvg(m->method + " error", res.trajectory_names,
                                 res.sigmas, em.error, ColorScale::kSigned));
    }
    summary.rows.push_back({m->method, FormatDouble(em.frobenius),
                            FormatDouble(em.max_abs),
                            FormatDouble(m->total_seconds)});
    for (size_t i = 0; i < m->errors.size(); ++i) {
      for (size_t j = 0; j < m->errors[i].size(); ++j) {
        if (m->errors[i][j].empty()) continue;
        ++failed_cells;
        err << m->method << " failed on " << res.trajectory_names[i]
            << ", sigma=" << res.sigmas[j] << ": " << m->errors[i][j] << "\n";
      }
    }
  }
  WriteCsv((dir / "summary.csv").string(), summary);
  if (res.scale_fit) {
    CsvTable fit;
    fit.header = {"scale", "frobenius"};
    fit.rows.push_back({FormatDouble(res.scale_fit->scale),
                        FormatDouble(res.scale_fit->frobenius)});
    WriteCsv((dir / "fit_scale.csv").string(), fit);
  }

  out << std::left << std::setw(20) << "method" << std::setw(12)
      << "frobenius" << std::setw(12) << "max_abs" << "seconds\n";
  for (const auto& row : summary.rows) {
    out << std::setw(20) << row[0] << std::setw(12)
        << std::setprecision(4) << ParseDouble(row[1]) << std::setw(12)
        << ParseDouble(row[2]) << std::setprecision(3) << ParseDouble(row[3])
        << "\n";
  }
  if (res.scale_fit) {
    out << "fitted scale " << std::setprecision(4) << res.scale_fit->scale
        << " (frobenius " << res.scale_fit->frobenius << ")\n";
  }
  return failed_cells > 0 ? kExitRuntime : kExitOk;
}

int CmdRadiusSweep(const CommonOptions& o, std::ostream& out,
                   std::ostream& err) {
  const bool svg = WantsSvg(o);
  const BenchmarkConfig cfg = ResolveConfig(o);
  const fs::path dir = PrepareOutDir(o.out_dir);
  const std::vector<double> radii = cfg.SweepRadii();
  const auto blocks = RadiusSweep(cfg, radii, cfg.sweep_sigmas);

  CsvTable summary;
  summary.header = {"trajectory",
                    "sigma",
                    "risk_density",
                    "mean_abs_sensitivity",
                    "mean_abs_risk_density",
                    "mean_rel_sensitivity",
                    "mean_rel_risk_density",
                    "rel_skipped"};
  for (const auto& b : blocks) {
    CsvTable t;
    t.header = {"radius", "dT", "montecarlo", "sensitivity_update",
                "risk_density_update"};
    for (size_t i = 0; i < b.points.size(); ++i) {
      const auto& p = b.points[i];
      const double dt = i == 0 ? 0.0 : p.radius - b.points[i - 1].radius;
      t.rows.push_back({FormatDouble(p.radius), FormatDouble(dt),
                        FormatDouble(p.mc),
                        FormatDouble(p.sensitivity_update),
                        FormatDouble(p.risk_density_update)});
    }
    WriteCsv((dir / ("sweep_" + b.trajectory + "_" + FormatDouble(b.sigma) +
                     ".csv"))
                 .string(),
             t);
    summary.rows.push_back(
        {b.trajectory, FormatDouble(b.sigma), FormatDouble(b.risk_density),
         FormatDouble(b.mean_abs_sensitivity),
         FormatDouble(b.mean_abs_risk_density),
         FormatDouble(b.mean_rel_sensitivity),
         FormatDouble(b.mean_rel_risk_density),
         std::to_string(b.rel_skipped)});
    if (b.rel_skipped > 0) {
      err << b.trajectory << ", sigma=" << b.sigma << ": " << b.rel_skipped
          << " radius pair(s) with zero Monte Carlo value left out of the "
             "relative mean\n";
    }
  }
  WriteCsv((dir / "sweep_summary.csv").string(), summary);

  // Matrix layout: one row per (mode, trajectory), one column per sigma.
  const auto& sigmas = cfg.sweep_sigmas;
  auto table = [&](bool relative) {
    CsvTable t;
    t.header = {"mode", "trajectory"};
    for (double s : sigmas) t.header.push_back(FormatDouble(s));
    Eigen::MatrixXd heat(2 * cfg.trajectories.size(), sigmas.size());
    std::vector<std::string> labels;
    for (const char* mode : {"sensitivity", "risk_density"}) {
      const bool sens = std::string(mode) == "sensitivity";
      for (size_t ti = 0; ti < cfg.trajectories.size(); ++ti) {
        std::vector<std::string> row{mode, cfg.trajectories[ti].name()};
        for (size_t si = 0; si < sigmas.size(); ++si) {
          const SweepBlock& b = blocks[ti * sigmas.size() + si];
          const double v =
              relative ? (sens ? b.mean_rel_sensitivity
                               : b.mean_rel_risk_density)
                       : (sens ? b.mean_abs_sensitivity
                               : b.mean_abs_risk_density);
          row.push_back(FormatDouble(v));
          heat(static_cast<Eigen::Index>(labels.size()),
               static_cast<Eigen::Index>(si)) = v;
        }
        labels.push_back(std::string(sens ? "S " : "rd ") +
                         cfg.trajectories[ti].name());
        t.rows.push_back(std::move(row));
      }
    }
    const std::string name = relative ? "sweep_rel_errors" : "sweep_abs_errors";
    WriteCsv((dir / (name + ".csv")).string(), t);
    if (svg) {
      WriteText(dir / (name + ".svg"),
                RenderHeatmapSvg(name, labels, sigmas, heat,
                                 ColorScale::kProbability));
    }
    return heat;
  };
  const Eigen::MatrixXd abs_err = table(false);
  table(true);

  out << "mean absolute error of first-order updates (percent)\n";
  out << std::left << std::setw(16) << "";
  for (double s : sigmas) out << std::setw(10) << s;
  out << "\n";
  size_t row = 0;
  for (const char* mode : {"S", "rd"}) {
    for (const auto& t : cfg.trajectories) {
      out << std::setw(16) << (std::string(mode) + " " + t.name());
      for (size_t si = 0; si < sigmas.size(); ++si) {
        out << std::setw(10) << std::fixed << std::setprecision(2)
            << 100.0 * abs_err(static_cast<Eigen::Index>(row),
                               static_cast<Eigen::Index>(si));
      }
      out << std::defaultfloat << "\n";
      ++row;
    }
  }
  return kExitOk;
}

int CmdFitScale(const CommonOptions& o, std::ostream& out) {
  const BenchmarkConfig cfg = ResolveConfig(o);
  const Eigen::MatrixXd truth = GroundTruthMatrix(cfg);
  const Eigen::MatrixXd rd = RiskDensityMatrix(cfg);
  const ScaleFit fit = FitScale(truth, rd);
  json line = {{"scale", fit.scale},
               {"frobenius", fit.frobenius},
               {"radius", cfg.combined_radius()},
               {"frobenius_at_radius",
                ScaleObjective(truth, rd, cfg.combined_radius())}};
  out << line.dump() << "\n";
  return kExitOk;
}

int PrintDefaultConfig(std::ostream& out) {
  out << ConfigToJson(BenchmarkConfig::Default()).dump(2) << "\n";
  return kExitOk;
}

void AddCommon(CLI::App* cmd, CommonOptions& o, bool outputs) {
  cmd->add_option("--config", o.config, "JSON configuration file");
  cmd->add_option("--seed", o.seed, "Monte Carlo seed override");
  cmd->add_option("--trials", o.trials, "Monte Carlo trial count override")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cells", o.cells,
                  "grid cell sizes, comma separated (e.g. 2^-9,0.01)");
  cmd->add_option("--waypoints", o.waypoints, "stage-wise waypoint count")
      ->check(CLI::PositiveNumber);
  if (outputs) {
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--emit", o.emit, "csv (always) and optionally svg")
        ->delimiter(',');
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Collision probability of uncertain disks along a path"};
  app.name("riskdensity");
  bool print_default = false;
  app.add_flag("--print-default-config", print_default,
               "print the default benchmark configuration and exit");

  CommonOptions est_o, bench_o, sweep_o, fit_o;
  EstimateOptions eo;
  auto* estimate = app.add_subcommand("estimate", "run one estimator");
  AddCommon(estimate, est_o, false);
  estimate->add_option("--method", eo.method, "estimator name")->required();
  estimate->add_option("--trajectory", eo.trajectory,
                       "trajectory name or index (default: first)");
  estimate->add_option("--sigma", eo.sigma, "isotropic variance")
      ->required();
  estimate->add_option("--radius", eo.radius, "combined radius override");
  estimate->add_option("--mode", eo.mode, "stage-wise bound: center|max_point");

  auto* bench = app.add_subcommand("bench", "trajectory x sigma benchmark");
  AddCommon(bench, bench_o, true);
  bench->add_option("--methods", bench_o.methods,
                    "comma separated subset of " + Join(AvailableMethods()));

  auto* sweep = app.add_subcommand("radius-sweep",
                                   "first-order updates across radii");
  AddCommon(sweep, sweep_o, true);

  auto* fit = app.add_subcommand("fit-scale",
                                 "least-squares scale for the risk density");
  AddCommon(fit, fit_o, false);

  auto* print = app.add_subcommand("print-default-config",
                                   "print the default configuration");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (print_default || print->parsed()) return PrintDefaultConfig(out);
    if (estimate->parsed()) return CmdEstimate(est_o, eo, out, err);
    if (bench->parsed()) return CmdBench(bench_o, out, err);
    if (sweep->parsed()) return CmdRadiusSweep(sweep_o, out, err);
    if (fit->parsed()) return CmdFitScale(fit_o, out);
    err << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace riskdensity::cli
