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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "riskdensity/errors.h"
#include "riskdensity/estimators.h"

namespace riskdensity {

Vec2 MaxDensityPoint(const Gaussian2& g, const Vec2& center, double radius) {
  const Vec2 to_mean = g.mean() - center;
  const double dist = to_mean.norm();
  if (dist <= radius) return g.mean();
  const Vec2 toward = center + radius * to_mean / dist;
  if (g.IsIsotropic()) return toward;

  // Minimize the Mahalanobis distance over the disk by projected gradient
  // descent, starting from the isotropic answer.
  const Mat2& precision = g.precision();
  const double lipschitz =
      0.5 * (precision.trace() +
             std::sqrt(std::pow(precision(0, 0) - precision(1, 1), 2) +
                       4.0 * precision(0, 1) * precision(0, 1)));
  const double step = 1.0 / lipschitz;
  auto project = [&](const Vec2& x) -> Vec2 {
    const Vec2 d = x - center;
    const double n = d.norm();
    return n <= radius ? x : Vec2(center + radius * d / n);
  };
  Vec2 x = toward;
  for (int it = 0; it < 100; ++it) {
    const Vec2 next = project(x - step * (precision * (x - g.mean())));
    if ((next - x).norm() <= 1e-14 * (1.0 + x.norm())) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

Estimate StagewiseEstimate(const Scenario& sc, int n_waypoints,
                           BoundMode mode) {
  const auto start = std::chrono::steady_clock::now();
  if (n_waypoints < 1) throw DomainError("need at least one waypoint");
  const ParamRange range = sc.range();
  const double area = sc.body().Area();
  const Gaussian2& noise = sc.noise();
  double sum = 0.0;
  for (int i = 0; i < n_waypoints; ++i) {
    const double s = range.lo + range.width() * (i + 0.5) / n_waypoints;
    const Vec2 center = sc.Offset(s);
    const Vec2 point = mode == BoundMode::kCenter
                           ? center
                           : MaxDensityPoint(noise, center, sc.radius());
    sum += area * noise.Density(point);
  }
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return Estimate::FromRaw(
      std::string(kStagewise), sum, elapsed,
      {{"waypoints", static_cast<double>(n_waypoints)},
       {"max_point", mode == BoundMode::kMaxPoint ? 1.0 : 0.0}});
}

}  // namespace riskdensity
