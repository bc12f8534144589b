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

#ifndef RISKDENSITY_PATH_H_
#define RISKDENSITY_PATH_H_

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "riskdensity/geometry.h"

namespace riskdensity {

// Position and parameter derivatives of a curve at one parameter value.
struct CurvePoint {
  Vec2 position;
  Vec2 d1;
  Vec2 d2;
};

// A point of the swept tube addressed by (path parameter, signed off-track
// distance). gamma is |det| of the Jacobian of the tube map.
struct TubePoint {
  double s;
  double theta;
  Vec2 position;
  double gamma;
};

struct SegmentCurve {
  Vec2 from;
  Vec2 to;
};

// x(s) = x[0] + x[1] s + x[2] s^2, likewise y.
struct QuadraticCurve {
  std::array<double, 3> x;
  std::array<double, 3> y;
};

// Knots at uniform parameter spacing; at a knot the derivative of the
// segment to the right is reported (the left one at s = 1).
struct PolylineCurve {
  std::vector<Vec2> points;
};

// Counter-clockwise when end_angle > start_angle.
struct ArcCurve {
  Vec2 center;
  double radius;
  double start_angle;
  double end_angle;
};

using CurveData =
    std::variant<SegmentCurve, QuadraticCurve, PolylineCurve, ArcCurve>;

// Immutable planar curve on the parameter domain [0, 1].
class Trajectory {
 public:
  // Throws InvalidShapeError on non-finite coefficients or degenerate
  // polylines/arcs.
  explicit Trajectory(CurveData data, std::string name = "");

  static Trajectory Segment(const Vec2& from, const Vec2& to,
                            std::string name = "");
  static Trajectory Quadratic(const std::array<double, 3>& x,
                              const std::array<double, 3>& y,
                              std::string name = "");
  static Trajectory Polyline(std::vector<Vec2> points, std::string name = "");
  static Trajectory Arc(const Vec2& center, double radius, double start_angle,
                        double end_angle, std::string name = "");

  // Throws DomainError for s outside [0, 1].
  CurvePoint Eval(double s) const;
  Vec2 Position(double s) const { return Eval(s).position; }
  double Speed(double s) const { return Eval(s).d1.norm(); }

  // Upper bound of |d mu / ds| over [0, 1].
  double MaxSpeed() const;
  // Arc length over [s0, s1].
  double Length(double s0 = 0.0, double s1 = 1.0) const;
  // Parameter values where the derivatives are discontinuous (polyline
  // knots); empty for smooth families.
  std::vector<double> Kinks() const;

  const CurveData& data() const { return data_; }
  const std::string& name() const { return name_; }
  std::string FamilyName() const;

 private:
  CurveData data_;
  std::string name_;
};

// Maps (s, theta) to mu(s) + theta n(s), with n the unit left normal, and
// reports gamma = |d1| |1 - kappa theta|. Throws DomainError for s outside
// [0, 1] or |theta| > half_width, RegularityError if the tangent vanishes.
TubePoint TubeMap(const Trajectory& traj, double s, double theta,
                  double half_width);

// Signed curvature (d1 x d2) / |d1|^3; throws RegularityError if |d1| == 0.
double SignedCurvature(const CurvePoint& p);

// The three benchmark paths from (0, 0) to (5, 0), passing an obstacle at
// (2.5, 0): a straight line and two parabolas with apex offsets 0.125 and
// 0.25.
std::array<Trajectory, 3> BenchmarkPaths();

}  // namespace riskdensity

#endif  // RISKDENSITY_PATH_H_
