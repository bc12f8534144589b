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

#include "riskdensity/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "riskdensity/errors.h"
#include "riskdensity/ground_truth_cache.h"

namespace riskdensity {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Clock = std::chrono::steady_clock;

MethodResult EmptyResult(const std::string& method, size_t rows,
                         size_t cols) {
  MethodResult out;
  out.method = method;
  out.values = Eigen::MatrixXd::Constant(rows, cols, kNaN);
  out.raw = Eigen::MatrixXd::Constant(rows, cols, kNaN);
  out.seconds = Eigen::MatrixXd::Zero(rows, cols);
  out.errors.assign(rows, std::vector<std::string>(cols));
  return out;
}

// Runs `estimate` over every scenario, repeating whole passes until the
// timing budget is used. Values come from the last pass.
template <typename F>
MethodResult TimedMethod(const BenchmarkConfig& cfg, const std::string& name,
                         F&& estimate) {
  const size_t rows = cfg.trajectories.size();
  const size_t cols = cfg.sigma_values.size();
  MethodResult out = EmptyResult(name, rows, cols);
  std::vector<Scenario> scenarios;
  scenarios.reserve(rows * cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      scenarios.push_back(cfg.MakeScenario(i, cfg.sigma_values[j]));
    }
  }

  std::vector<double> pass_times;
  double spent = 0.0;
  do {
    const auto pass_start = Clock::now();
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) {
        const auto cell_start = Clock::now();
        try {
          const Estimate e = estimate(scenarios[i * cols + j]);
          out.values(i, j) = e.value;
          out.raw(i, j) = e.raw;
          out.errors[i][j].clear();
        } catch (const Error& err) {
          out.values(i, j) = kNaN;
          out.raw(i, j) = kNaN;
          out.errors[i][j] = err.what();
        }
        out.seconds(i, j) =
            std::chrono::duration<double>(Clock::now() - cell_start).count();
      }
    }
    const double t =
        std::chrono::duration<double>(Clock::now() - pass_start).count();
    pass_times.push_back(t);
    spent += t;
  } while (spent < cfg.timing_budget_seconds &&
           static_cast<int>(pass_times.size()) < cfg.timing_max_repeats);

  double mean = 0.0;
  for (double t : pass_times) mean += t;
  mean /= static_cast<double>(pass_times.size());
  double var = 0.0;
  for (double t : pass_times) var += (t - mean) * (t - mean);
  out.total_seconds = mean;
  out.total_seconds_std =
      pass_times.size() > 1
          ? std::sqrt(var / static_cast<double>(pass_times.size() - 1))
          : 0.0;
  out.timing_passes = static_cast<int>(pass_times.size());
  return out;
}

}  // namespace

std::vector<double> LogSpace(double lo, double hi, int n) {
  if (n < 1 || !(lo > 0.0) || !(hi >= lo)) {
    throw DomainError("LogSpace needs n >= 1 and 0 < lo <= hi");
  }
  std::vector<double> out(static_cast<size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < n; ++i) {
    out[static_cast<size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

BenchmarkConfig BenchmarkConfig::Default() {
  BenchmarkConfig cfg;
  cfg.sigma_values = LogSpace(1e-3, 1.0, 10);
  const auto paths = BenchmarkPaths();
  cfg.trajectories.assign(paths.begin(), paths.end());
  cfg.grid_cell_sizes = {0x1.0p-9};
  cfg.sweep_sigmas = {1e-3, 1e-2, 1e-1, 1.0};
  return cfg;
}

void BenchmarkConfig::Validate() const {
  if (sigma_values.empty()) throw DomainError("no sigma values");
  for (size_t i = 0; i < sigma_values.size(); ++i) {
    if (!(sigma_values[i] > 0.0)) throw DomainError("sigma must be positive");
    if (i > 0 && !(sigma_values[i] > sigma_values[i - 1])) {
      throw DomainError("sigma values must be strictly ascending");
    }
  }
  if (trajectories.empty()) throw DomainError("no trajectories");
  MinkowskiCombine(robot_radius, obstacle_radius);
  if (mc_trials < 1) throw DomainError("mc_trials must be >= 1");
  if (stagewise_n < 1) throw DomainError("stagewise waypoints must be >= 1");
  for (double h : grid_cell_sizes) {
    if (!(h > 0.0)) throw DomainError("grid cell sizes must be positive");
  }
  if (grid_max_cells < 1) throw DomainError("grid_max_cells must be >= 1");
  quadrature.Validate();
  if (sweep_radius_count < 1 || !(sweep_radius_min > 0.0) ||
      !(sweep_radius_max >= sweep_radius_min)) {
    throw DomainError("invalid radius sweep grid");
  }
  for (double s : sweep_sigmas) {
    if (!(s > 0.0)) throw DomainError("sweep sigma must be positive");
  }
  if (timing_max_repeats < 1) throw DomainError("timing_max_repeats >= 1");
  if (!(range.lo >= 0.0 && range.hi <= 1.0 && range.lo <= range.hi)) {
    throw DomainError("invalid parameter range");
  }
}

MonteCarloOptions BenchmarkConfig::monte_carlo_options() const {
  MonteCarloOptions opts;
  opts.trials = mc_trials;
  opts.seed = mc_seed;
  opts.ds_max = mc_ds_max;
  opts.threads = mc_threads;
  return opts;
}

Scenario BenchmarkConfig::MakeScenario(size_t trajectory, double sigma) const {
  return Scenario::Isotropic(trajectories.at(trajectory), obstacle_mean,
                             combined_radius(), sigma, range);
}

std::vector<double> BenchmarkConfig::SweepRadii() const {
  return LogSpace(sweep_radius_min, sweep_radius_max, sweep_radius_count);
}

bool MethodResult::ok() const {
  for (const auto& row : errors) {
    for (const auto& e : row) {
      if (!e.empty()) return false;
    }
  }
  return true;
}

const MethodResult* BenchmarkResult::Find(const std::string& method) const {
  if (method == ground_truth.method) return &ground_truth;
  for (const auto& m : methods) {
    if (m.method == method) return &m;
  }
  return nullptr;
}

std::vector<std::string> AvailableMethods() {
  return {std::string(kStagewise), std::string(kParametrization),
          std::string(kRiskDensity), std::string(kGrid),
          std::string(kVolterra)};
}

std::string GridMethodName(double cell_size) {
  char buf[64];
  const double exponent = std::log2(cell_size);
  if (exponent == std::round(exponent)) {
    std::snprintf(buf, sizeof(buf), "grid_2^%d", static_cast<int>(exponent));
  } else {
    std::snprintf(buf, sizeof(buf), "grid_%.6g", cell_size);
  }
  return buf;
}

Eigen::MatrixXd GroundTruthMatrix(const BenchmarkConfig& cfg) {
  cfg.Validate();
  std::optional<GroundTruthCache> cache;
  uint64_t key = 0;
  if (!cfg.cache_dir.empty()) {
    cache.emplace(cfg.cache_dir);
    key = GroundTruthCache::Key(cfg);
    if (auto hit = cache->Load(key)) return *hit;
  }
  const size_t rows = cfg.trajectories.size();
  const size_t cols = cfg.sigma_values.size();
  Eigen::MatrixXd m(rows, cols);
  const MonteCarloOptions opts = cfg.monte_carlo_options();
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      m(i, j) = MonteCarloGroundTruth(cfg.MakeScenario(i, cfg.sigma_values[j]),
                                      opts)
                    .value;
    }
  }
  if (cache) cache->Store(key, m);
  return m;
}

BenchmarkResult RunBenchmark(const BenchmarkConfig& cfg,
                             const std::vector<std::string>& methods) {
  cfg.Validate();
  const std::vector<std::string> selected =
      methods.empty() ? AvailableMethods() : methods;
  const std::vector<std::string> known = AvailableMethods();
  for (const auto& m : selected) {
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      throw DomainError("unknown method '" + m + "'");
    }
  }

  BenchmarkResult out;
  for (const auto& t : cfg.trajectories) out.trajectory_names.push_back(t.name());
  out.sigmas = cfg.sigma_values;
  const size_t rows = cfg.trajectories.size();
  const size_t cols = cfg.sigma_values.size();

  const auto gt_start = Clock::now();
  out.ground_truth = EmptyResult(std::string(kMonteCarlo), rows, cols);
  out.ground_truth.values = GroundTruthMatrix(cfg);
  out.ground_truth.raw = out.ground_truth.values;
  out.ground_truth.total_seconds =
      std::chrono::duration<double>(Clock::now() - gt_start).count();
  out.ground_truth.timing_passes = 1;

  const QuadratureSpec q = cfg.quadrature;
  // Canonical order keeps result listings stable whatever the selection.
  for (const auto& name : known) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) {
      continue;
    }
    if (name == kStagewise) {
      out.methods.push_back(TimedMethod(cfg, name, [&](const Scenario& sc) {
        return StagewiseEstimate(sc, cfg.stagewise_n, cfg.stagewise_mode);
      }));
    } else if (name == kParametrization) {
      out.methods.push_back(TimedMethod(
          cfg, name, [&](const Scenario& sc) { return NaiveParamH3(sc, q); }));
    } else if (name == kVolterra) {
      out.methods.push_back(TimedMethod(
          cfg, name, [&](const Scenario& sc) { return VolterraH2(sc, q); }));
    } else if (name == kRiskDensity) {
      out.methods.push_back(TimedMethod(cfg, name, [&](const Scenario& sc) {
        return RiskDensityEstimate(sc, 0.0, q);
      }));
      // Same estimator with the scale fitted against the ground truth.
      MethodResult fitted = out.methods.back();
      const Eigen::MatrixXd densities =
          fitted.raw / cfg.combined_radius();
      const ScaleFit fit = FitScale(out.ground_truth.values, densities);
      fitted.method = std::string(kRiskDensity) + "_opt";
      fitted.raw = densities * fit.scale;
      fitted.values = fitted.raw.cwiseMin(1.0);
      out.scale_fit = fit;
      out.methods.push_back(std::move(fitted));
    } else if (name == kGrid) {
      for (double h : cfg.grid_cell_sizes) {
        GridOptions opts;
        opts.cell_size = h;
        opts.max_cells = cfg.grid_max_cells;
        out.methods.push_back(
            TimedMethod(cfg, GridMethodName(h), [&](const Scenario& sc) {
              return GridEstimate(sc, opts);
            }));
      }
    }
  }
  return out;
}

ErrorMetrics ComputeErrorMetrics(const Eigen::MatrixXd& truth,
                                 const Eigen::MatrixXd& estimate,
                                 std::string method) {
  if (truth.rows() != estimate.rows() || truth.cols() != estimate.cols()) {
    throw ShapeMismatchError("error matrix operands differ in shape");
  }
  ErrorMetrics out;
  out.method = std::move(method);
  out.error = truth - estimate;
  out.frobenius = out.error.norm();
  out.max_abs = out.error.size() > 0 ? out.error.cwiseAbs().maxCoeff() : 0.0;
  return out;
}

double ScaleObjective(const Eigen::MatrixXd& truth,
                      const Eigen::MatrixXd& risk_densities, double scale) {
  return (truth - (risk_densities * scale).cwiseMin(1.0)).norm();
}

ScaleFit FitScale(const Eigen::MatrixXd& truth,
                  const Eigen::MatrixXd& risk_densities, double lo,
                  double hi) {
  if (truth.rows() != risk_densities.rows() ||
      truth.cols() != risk_densities.cols()) {
    throw ShapeMismatchError("fit operands differ in shape");
  }
  if (!(hi > lo)) throw DomainError("empty scale bracket");
  auto objective = [&](double s) {
    return ScaleObjective(truth, risk_densities, s);
  };
  // The objective is piecewise smooth (saturation kinks) and need not be
  // unimodal, so bracket the global minimum with a scan first.
  constexpr int kScan = 1000;
  int best = 0;
  double best_val = objective(lo);
  for (int i = 1; i <= kScan; ++i) {
    const double v = objective(lo + (hi - lo) * i / kScan);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double a = lo + (hi - lo) * std::max(0, best - 1) / kScan;
  const double b = lo + (hi - lo) * std::min(kScan, best + 1) / kScan;
  const auto [x, fx] =
      boost::math::tools::brent_find_minima(objective, a, b, 50);
  ScaleFit fit;
  if (fx <= best_val) {
    fit.scale = x;
    fit.frobenius = fx;
  } else {
    fit.scale = lo + (hi - lo) * best / kScan;
    fit.frobenius = best_val;
  }
  return fit;
}

Eigen::MatrixXd RiskDensityMatrix(const BenchmarkConfig& cfg) {
  const size_t rows = cfg.trajectories.size();
  const size_t cols = cfg.sigma_values.size();
  Eigen::MatrixXd m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      m(i, j) = RiskDensity(cfg.MakeScenario(i, cfg.sigma_values[j]),
                            cfg.quadrature);
    }
  }
  return m;
}

std::vector<SweepBlock> RadiusSweep(const BenchmarkConfig& cfg,
                                    const std::vector<double>& radii,
                                    const std::vector<double>& sigmas) {
  cfg.Validate();
  if (radii.empty()) throw DomainError("radius grid is empty");
  for (size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw DomainError("radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw DomainError("radii must be strictly ascending");
    }
  }
  const QuadratureSpec q = cfg.quadrature;
  MonteCarloOptions mc = cfg.monte_carlo_options();
  std::vector<SweepBlock> out;
  for (size_t t = 0; t < cfg.trajectories.size(); ++t) {
    for (double sigma : sigmas) {
      const Scenario base = cfg.MakeScenario(t, sigma);
      SweepBlock block;
      block.trajectory = cfg.trajectories[t].name();
      block.sigma = sigma;
      block.risk_density = RiskDensity(base, q);
      for (double r : radii) {
        SweepPoint p;
        p.radius = r;
        p.mc = MonteCarloGroundTruth(base.WithRadius(r), mc).value;
        block.points.push_back(p);
      }
      block.points[0].sensitivity_update = block.points[0].mc;
      block.points[0].risk_density_update = block.points[0].mc;
      double abs_sens = 0.0;
      double abs_rd = 0.0;
      double rel_sens = 0.0;
      double rel_rd = 0.0;
      int rel_count = 0;
      for (size_t i = 1; i < block.points.size(); ++i) {
        SweepPoint& p = block.points[i];
        const SweepPoint& prev = block.points[i - 1];
        const double dt = p.radius - prev.radius;
        p.sensitivity_update =
            CpUpdate(prev.mc, base.WithRadius(prev.radius), prev.radius, dt,
                     UpdateMode::kSensitivityH3, q);
        p.risk_density_update =
            std::clamp(prev.mc + block.risk_density * dt, 0.0, 1.0);
        const double es = std::abs(p.sensitivity_update - p.mc);
        const double er = std::abs(p.risk_density_update - p.mc);
        abs_sens += es;
        abs_rd += er;
        if (p.mc > 0.0) {
          rel_sens += es / p.mc;
          rel_rd += er / p.mc;
          ++rel_count;
        } else {
          ++block.rel_skipped;
        }
      }
      const auto pairs = static_cast<double>(block.points.size() - 1);
      if (pairs > 0) {
        block.mean_abs_sensitivity = abs_sens / pairs;
        block.mean_abs_risk_density = abs_rd / pairs;
      }
      if (rel_count > 0) {
        block.mean_rel_sensitivity = rel_sens / rel_count;
        block.mean_rel_risk_density = rel_rd / rel_count;
      }
      out.push_back(std::move(block));
    }
  }
  return out;
}

}  // namespace riskdensity
