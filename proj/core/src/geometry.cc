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

#include "riskdensity/geometry.h"

#include <cmath>
#include <numbers>
#include <string>

#include "riskdensity/errors.h"

namespace riskdensity {
namespace {

void CheckRadius(double radius, const char* what) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw InvalidShapeError(std::string(what) +
                            " radius must be positive and finite, got " +
                            std::to_string(radius));
  }
}

}  // namespace

Disk::Disk(double radius, const Vec2& nominal_center)
    : radius_(radius), nominal_center_(nominal_center) {
  CheckRadius(radius, "disk");
  if (!nominal_center.allFinite()) {
    throw InvalidShapeError("disk center must be finite");
  }
}

CombinedBody::CombinedBody(double radius) : radius_(radius) {
  CheckRadius(radius, "combined body");
}

double CombinedBody::Area() const {
  return std::numbers::pi * radius_ * radius_;
}

CombinedBody MinkowskiCombine(const Disk& robot, const Disk& obstacle) {
  return CombinedBody(robot.radius() + obstacle.radius());
}

CombinedBody MinkowskiCombine(double robot_radius, double obstacle_radius) {
  CheckRadius(robot_radius, "robot");
  CheckRadius(obstacle_radius, "obstacle");
  return CombinedBody(robot_radius + obstacle_radius);
}

bool CollisionCheck(const Vec2& d_ro, const Vec2& noise,
                    const CombinedBody& body) {
  return (noise - d_ro).squaredNorm() <= body.radius() * body.radius();
}

}  // namespace riskdensity
