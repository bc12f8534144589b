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

#include "riskdensity/scenario.h"

#include <algorithm>
#include <string>
#include <utility>

#include "riskdensity/errors.h"

namespace riskdensity {

Scenario::Scenario(Trajectory trajectory, const Vec2& obstacle_mean,
                   CombinedBody body, const Mat2& sigma_t, ParamRange range)
    : trajectory_(std::move(trajectory)),
      obstacle_mean_(obstacle_mean),
      body_(body),
      noise_(Vec2::Zero(), sigma_t),
      range_(range) {
  if (!obstacle_mean.allFinite()) {
    throw DomainError("obstacle mean must be finite");
  }
  if (!(range.lo >= 0.0 && range.hi <= 1.0 && range.lo <= range.hi)) {
    throw DomainError("parameter range must be a nonempty subinterval of "
                      "[0, 1]");
  }
}

Scenario Scenario::Isotropic(Trajectory trajectory, const Vec2& obstacle_mean,
                             double combined_radius, double variance,
                             ParamRange range) {
  return Scenario(std::move(trajectory), obstacle_mean,
                  CombinedBody(combined_radius), variance * Mat2::Identity(),
                  range);
}

Vec2 Scenario::Offset(double s) const {
  return trajectory_.Position(s) - obstacle_mean_;
}

Scenario Scenario::WithRadius(double combined_radius) const {
  Scenario out = *this;
  out.body_ = CombinedBody(combined_radius);
  return out;
}

Scenario Scenario::WithRange(ParamRange range) const {
  return Scenario(trajectory_, obstacle_mean_, body_, noise_.cov(), range);
}

Estimate Estimate::FromRaw(std::string method, double raw, double wall_time,
                           std::map<std::string, double> meta) {
  Estimate e;
  e.method = std::move(method);
  e.raw = std::max(raw, 0.0);
  e.value = std::min(e.raw, 1.0);
  e.wall_time = wall_time;
  e.meta = std::move(meta);
  return e;
}

}  // namespace riskdensity
