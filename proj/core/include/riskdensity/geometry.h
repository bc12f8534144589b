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

#ifndef RISKDENSITY_GEOMETRY_H_
#define RISKDENSITY_GEOMETRY_H_

#include <Eigen/Core>

namespace riskdensity {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// A disk-shaped body: the robot or the obstacle.
class Disk {
 public:
  // Throws InvalidShapeError unless radius > 0 and all values are finite.
  Disk(double radius, const Vec2& nominal_center = Vec2::Zero());

  double radius() const { return radius_; }
  const Vec2& nominal_center() const { return nominal_center_; }

 private:
  double radius_;
  Vec2 nominal_center_;
};

// Minkowski combination of two disks, expressed in the difference domain
// (robot minus obstacle). It is the disk of summed radii centered at the
// origin, so collision reduces to a point-in-disk test.
class CombinedBody {
 public:
  // Throws InvalidShapeError unless radius > 0 and finite.
  explicit CombinedBody(double radius);

  double radius() const { return radius_; }
  // Area of the combined disk, pi * r^2.
  double Area() const;

 private:
  double radius_;
};

// Throws InvalidShapeError when either radius is non-positive.
CombinedBody MinkowskiCombine(const Disk& robot, const Disk& obstacle);
CombinedBody MinkowskiCombine(double robot_radius, double obstacle_radius);

// True iff |noise - d_ro| <= r. Contact on the boundary counts as a
// collision.
bool CollisionCheck(const Vec2& d_ro, const Vec2& noise,
                    const CombinedBody& body);

}  // namespace riskdensity

#endif  // RISKDENSITY_GEOMETRY_H_
