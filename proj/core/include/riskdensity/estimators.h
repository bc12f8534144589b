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

#ifndef RISKDENSITY_ESTIMATORS_H_
#define RISKDENSITY_ESTIMATORS_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "riskdensity/quadrature.h"
#include "riskdensity/scenario.h"

namespace riskdensity {

// Method tags used in Estimate::method and in result files.
inline constexpr std::string_view kMonteCarlo = "montecarlo";
inline constexpr std::string_view kParametrization = "parametrization";
inline constexpr std::string_view kVolterra = "volterra";
inline constexpr std::string_view kGrid = "grid";
inline constexpr std::string_view kStagewise = "stagewise";
inline constexpr std::string_view kRiskDensity = "risk_density";

// ---------------------------------------------------------------------------
// Single configurations and discrete combiners
// ---------------------------------------------------------------------------

// Gaussian mass of D_RO(s) under N(0, Sigma_T). Throws DomainError if s is
// outside the scenario's range.
double PConfig(const Scenario& sc, double s, const QuadratureSpec& q = {});

// Independent events: 1 - prod(1 - p_i). Empty input gives 0.
double CombineH1(std::span<const double> probs);

// Markovian "newly swept area" combiner over an ordered list of
// configurations: the first configuration is charged with its full disk
// mass, every later one with the mass of its disk minus the previous disk.
double CombineH2Discrete(const Scenario& sc, std::span<const double> configs,
                         const QuadratureSpec& q = {});

// Mass of disk(c_new, r) \ disk(c_prev, r) under g.
double LuneMass(const Gaussian2& g, const Vec2& c_new, const Vec2& c_prev,
                double radius, const QuadratureSpec& q = {});

// ---------------------------------------------------------------------------
// Monte Carlo ground truth (stopped process: one obstacle draw per trial)
// ---------------------------------------------------------------------------

struct MonteCarloOptions {
  int64_t trials = 10000;
  // Maximum distance between consecutive path samples; <= 0 selects r/10.
  double ds_max = 0.0;
  uint64_t seed = 20230823;
  // Worker threads; 0 selects std::thread::hardware_concurrency().
  int threads = 0;
};

Estimate MonteCarloGroundTruth(const Scenario& sc,
                               const MonteCarloOptions& opts = {});

// ---------------------------------------------------------------------------
// Swept-tube integrals
// ---------------------------------------------------------------------------

// Double integral of N(Phi(s, nu) - mu_O | 0, Sigma_T) Gamma(s, nu) over
// the scenario range times [-half_width, half_width].
double TubeIntegral(const Scenario& sc, double half_width,
                    const QuadratureSpec& q = {});

// Tube integral with half-width r, saturated.
Estimate NaiveParamH3(const Scenario& sc, const QuadratureSpec& q = {});

// 1 - exp(-tube integral).
Estimate VolterraH2(const Scenario& sc, const QuadratureSpec& q = {});

// ---------------------------------------------------------------------------
// Occupancy grid
// ---------------------------------------------------------------------------

struct GridOptions {
  double cell_size = 0x1.0p-9;
  int64_t max_cells = 50'000'000;
};

// Rasterizes the swept set onto square cells anchored at the origin,
// charges each touched cell with its Gaussian mass under N(mu_O, Sigma_T)
// and combines them as independent events. Throws ResourceError when the
// bounding grid exceeds max_cells.
Estimate GridEstimate(const Scenario& sc, const GridOptions& opts = {});

// ---------------------------------------------------------------------------
// Stage-wise (Boole) sum
// ---------------------------------------------------------------------------

enum class BoundMode {
  // Density at the disk center times the disk area.
  kCenter,
  // Maximum density over the disk times the disk area (an upper bound per
  // waypoint).
  kMaxPoint,
};

// Point of the disk |x - center| <= radius maximizing the density of g.
Vec2 MaxDensityPoint(const Gaussian2& g, const Vec2& center, double radius);

// Waypoints sit at the midpoints of n equal parameter cells of the range.
Estimate StagewiseEstimate(const Scenario& sc, int n_waypoints,
                           BoundMode mode = BoundMode::kCenter);

// ---------------------------------------------------------------------------
// Risk density and sensitivities
// ---------------------------------------------------------------------------

// 2 * integral of N(mu_R(s) - mu_O | 0, Sigma_T) |d mu_R / ds| ds over the
// range. Units: 1 / length.
double RiskDensity(const Scenario& sc, const QuadratureSpec& q = {});

// raw = RiskDensity * scale; scale <= 0 selects the combined radius.
Estimate RiskDensityEstimate(const Scenario& sc, double scale = 0.0,
                             const QuadratureSpec& q = {});

enum class Hypothesis { kH2, kH3 };

// Derivative of the tube probability with respect to its half-width T.
double Sensitivity(const Scenario& sc, double half_width, Hypothesis h,
                   const QuadratureSpec& q = {});

enum class UpdateMode { kSensitivityH2, kSensitivityH3, kRiskDensity };

// First-order update of a known probability for a change dT of the
// combined radius, clamped to [0, 1].
double CpUpdate(double p_prev, const Scenario& sc, double t_prev, double dt,
                UpdateMode mode, const QuadratureSpec& q = {});

}  // namespace riskdensity

#endif  // RISKDENSITY_ESTIMATORS_H_
