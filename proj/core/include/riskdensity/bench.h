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

#ifndef RISKDENSITY_BENCH_H_
#define RISKDENSITY_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "riskdensity/estimators.h"

namespace riskdensity {

// Everything needed to regenerate the trajectory x variance study.
struct BenchmarkConfig {
  std::vector<double> sigma_values;  // variances, ascending
  std::vector<Trajectory> trajectories;
  double robot_radius = 0.05;
  double obstacle_radius = 0.05;
  Vec2 obstacle_mean = Vec2(2.5, 0.0);
  ParamRange range;

  int64_t mc_trials = 10000;
  uint64_t mc_seed = 20230823;
  double mc_ds_max = 0.0;  // <= 0 selects r / 10
  int mc_threads = 0;

  int stagewise_n = 50;
  BoundMode stagewise_mode = BoundMode::kCenter;
  std::vector<double> grid_cell_sizes;
  int64_t grid_max_cells = 50'000'000;
  QuadratureSpec quadrature;

  // Radius sweep.
  double sweep_radius_min = 1e-2;
  double sweep_radius_max = 1.0;
  int sweep_radius_count = 10;
  std::vector<double> sweep_sigmas;

  // Each method is re-run over the whole scenario set until this much
  // wall time has accumulated (at least once, at most timing_max_repeats).
  double timing_budget_seconds = 0.25;
  int timing_max_repeats = 100;

  // Directory for cached Monte Carlo matrices; empty disables caching.
  std::string cache_dir;

  // 3 benchmark paths, 10 variances log-spaced on [1e-3, 1], r = 0.1,
  // 1e4 trials, 50 stage-wise waypoints, grid cell 2^-9.
  static BenchmarkConfig Default();

  // Throws DomainError on an inconsistent configuration.
  void Validate() const;
  double combined_radius() const { return robot_radius + obstacle_radius; }
  MonteCarloOptions monte_carlo_options() const;
  Scenario MakeScenario(size_t trajectory, double sigma) const;
  std::vector<double> SweepRadii() const;
};

// n values log-spaced on [lo, hi], endpoints included.
std::vector<double> LogSpace(double lo, double hi, int n);

// Values of one method over the trajectories x sigmas grid.
struct MethodResult {
  std::string method;
  Eigen::MatrixXd values;
  Eigen::MatrixXd raw;
  Eigen::MatrixXd seconds;  // per-scenario time of the last timing pass
  double total_seconds = 0.0;  // mean over timing passes
  double total_seconds_std = 0.0;
  int timing_passes = 0;
  // Per-cell failure message; empty where the estimator succeeded.
  std::vector<std::vector<std::string>> errors;

  bool ok() const;
};

struct ScaleFit {
  double scale = 0.0;
  double frobenius = 0.0;
};

struct BenchmarkResult {
  std::vector<std::string> trajectory_names;
  std::vector<double> sigmas;
  MethodResult ground_truth;
  std::vector<MethodResult> methods;
  // Set when risk_density ran; its scaled twin is "risk_density_opt".
  std::optional<ScaleFit> scale_fit;

  const MethodResult* Find(const std::string& method) const;
};

// Method names accepted by RunBenchmark; "grid" expands to one entry per
// configured cell size.
std::vector<std::string> AvailableMethods();
std::string GridMethodName(double cell_size);

// Runs Monte Carlo (cached when cache_dir is set) and every selected
// method. An empty selection runs the full comparison set.
BenchmarkResult RunBenchmark(const BenchmarkConfig& cfg,
                             const std::vector<std::string>& methods = {});

// Monte Carlo matrix only, through the cache when configured.
Eigen::MatrixXd GroundTruthMatrix(const BenchmarkConfig& cfg);

struct ErrorMetrics {
  std::string method;
  Eigen::MatrixXd error;  // M_T - M_P
  double frobenius = 0.0;
  double max_abs = 0.0;
};

// Throws ShapeMismatchError when shapes differ.
ErrorMetrics ComputeErrorMetrics(const Eigen::MatrixXd& truth,
                                 const Eigen::MatrixXd& estimate,
                                 std::string method = "");

// Frobenius norm of truth - min(risk_densities * scale, 1).
double ScaleObjective(const Eigen::MatrixXd& truth,
                      const Eigen::MatrixXd& risk_densities, double scale);

// Minimizes ScaleObjective over [lo, hi]: a uniform scan locates the best
// bracket, Brent's method refines it.
ScaleFit FitScale(const Eigen::MatrixXd& truth,
                  const Eigen::MatrixXd& risk_densities, double lo = 0.0,
                  double hi = 1.0);

// Risk densities of every benchmark scenario.
Eigen::MatrixXd RiskDensityMatrix(const BenchmarkConfig& cfg);

struct SweepPoint {
  double radius = 0.0;
  double mc = 0.0;
  double sensitivity_update = 0.0;
  double risk_density_update = 0.0;
};

struct SweepBlock {
  std::string trajectory;
  double sigma = 0.0;
  double risk_density = 0.0;
  std::vector<SweepPoint> points;
  // Means over consecutive radius pairs of |update - MC| and of
  // |update - MC| / MC; pairs with MC == 0 are left out of the relative
  // mean and counted in rel_skipped.
  double mean_abs_sensitivity = 0.0;
  double mean_abs_risk_density = 0.0;
  double mean_rel_sensitivity = 0.0;
  double mean_rel_risk_density = 0.0;
  int rel_skipped = 0;
};

// For every trajectory and sweep sigma: fresh Monte Carlo at each radius,
// and first-order predictions from the previous radius' Monte Carlo value
// (sensitivity under the stopped-process hypothesis, and risk density).
std::vector<SweepBlock> RadiusSweep(const BenchmarkConfig& cfg,
                                    const std::vector<double>& radii,
                                    const std::vector<double>& sigmas);

}  // namespace riskdensity

#endif  // RISKDENSITY_BENCH_H_
