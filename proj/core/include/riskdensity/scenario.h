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

#ifndef RISKDENSITY_SCENARIO_H_
#define RISKDENSITY_SCENARIO_H_

#include <map>
#include <string>

#include "riskdensity/gauss.h"
#include "riskdensity/geometry.h"
#include "riskdensity/path.h"

namespace riskdensity {

// Closed subinterval [lo, hi] of the path parameter domain. A range other
// than [0, 1] restricts every estimator to a subpath, e.g. the probability
// still ahead of a robot at s = lo.
struct ParamRange {
  double lo = 0.0;
  double hi = 1.0;

  double width() const { return hi - lo; }
  bool Contains(double s) const { return s >= lo && s <= hi; }
};

// The unit of estimation: a path, the nominal obstacle position, the
// combined body and the combined positional covariance Sigma_T.
class Scenario {
 public:
  // Throws DomainError if the range is empty or leaves [0, 1].
  Scenario(Trajectory trajectory, const Vec2& obstacle_mean,
           CombinedBody body, const Mat2& sigma_t, ParamRange range = {});

  // Sigma_T = variance * I.
  static Scenario Isotropic(Trajectory trajectory, const Vec2& obstacle_mean,
                            double combined_radius, double variance,
                            ParamRange range = {});

  const Trajectory& trajectory() const { return trajectory_; }
  const Vec2& obstacle_mean() const { return obstacle_mean_; }
  const CombinedBody& body() const { return body_; }
  double radius() const { return body_.radius(); }
  // Zero-mean N(0, Sigma_T).
  const Gaussian2& noise() const { return noise_; }
  const ParamRange& range() const { return range_; }

  // mu_R(s) - mu_O: center of the integration disk D_RO(s).
  Vec2 Offset(double s) const;

  Scenario WithRadius(double combined_radius) const;
  Scenario WithRange(ParamRange range) const;

 private:
  Trajectory trajectory_;
  Vec2 obstacle_mean_;
  CombinedBody body_;
  Gaussian2 noise_;
  ParamRange range_;
};

// Method-tagged probability. raw is the unsaturated approximation (it may
// exceed 1 for additive or linearized methods); value = min(raw, 1).
struct Estimate {
  std::string method;
  double value = 0.0;
  double raw = 0.0;
  double wall_time = 0.0;
  std::map<std::string, double> meta;

  static Estimate FromRaw(std::string method, double raw, double wall_time,
                          std::map<std::string, double> meta = {});
};

}  // namespace riskdensity

#endif  // RISKDENSITY_SCENARIO_H_
