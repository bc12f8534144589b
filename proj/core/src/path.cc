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

#include "riskdensity/path.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "riskdensity/errors.h"
#include "riskdensity/quadrature.h"

namespace riskdensity {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double Cross(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

void Validate(const SegmentCurve& c) {
  if (!c.from.allFinite() || !c.to.allFinite()) {
    throw InvalidShapeError("segment endpoints must be finite");
  }
  if (c.from == c.to) throw InvalidShapeError("segment has zero length");
}

void Validate(const QuadraticCurve& c) {
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(c.x[i]) || !std::isfinite(c.y[i])) {
      throw InvalidShapeError("quadratic coefficients must be finite");
    }
  }
}

void Validate(const PolylineCurve& c) {
  if (c.points.size() < 2) {
    throw InvalidShapeError("polyline needs at least two points");
  }
  for (size_t i = 0; i < c.points.size(); ++i) {
    if (!c.points[i].allFinite()) {
      throw InvalidShapeError("polyline points must be finite");
    }
    if (i > 0 && c.points[i] == c.points[i - 1]) {
      throw InvalidShapeError("polyline has a zero-length segment");
    }
  }
}

void Validate(const ArcCurve& c) {
  if (!c.center.allFinite() || !std::isfinite(c.start_angle) ||
      !std::isfinite(c.end_angle)) {
    throw InvalidShapeError("arc parameters must be finite");
  }
  if (!std::isfinite(c.radius) || c.radius <= 0.0) {
    throw InvalidShapeError("arc radius must be positive");
  }
  if (c.start_angle == c.end_angle) {
    throw InvalidShapeError("arc has zero sweep");
  }
}

}  // namespace

Trajectory::Trajectory(CurveData data, std::string name)
    : data_(std::move(data)), name_(std::move(name)) {
  std::visit([](const auto& c) { Validate(c); }, data_);
}

Trajectory Trajectory::Segment(const Vec2& from, const Vec2& to,
                               std::string name) {
  return Trajectory(SegmentCurve{from, to}, std::move(name));
}

Trajectory Trajectory::Quadratic(const std::array<double, 3>& x,
                                 const std::array<double, 3>& y,
                                 std::string name) {
  return Trajectory(QuadraticCurve{x, y}, std::move(name));
}

Trajectory Trajectory::Polyline(std::vector<Vec2> points, std::string name) {
  return Trajectory(PolylineCurve{std::move(points)}, std::move(name));
}

Trajectory Trajectory::Arc(const Vec2& center, double radius,
                           double start_angle, double end_angle,
                           std::string name) {
  return Trajectory(ArcCurve{center, radius, start_angle, end_angle},
                    std::move(name));
}

CurvePoint Trajectory::Eval(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw DomainError("curve parameter " + std::to_string(s) +
                      " outside [0, 1]");
  }
  return std::visit(
      Overloaded{
          [s](const SegmentCurve& c) {
            const Vec2 d = c.to - c.from;
            return CurvePoint{c.from + s * d, d, Vec2::Zero()};
          },
          [s](const QuadraticCurve& c) {
            return CurvePoint{
                Vec2(c.x[0] + s * (c.x[1] + s * c.x[2]),
                     c.y[0] + s * (c.y[1] + s * c.y[2])),
                Vec2(c.x[1] + 2.0 * s * c.x[2], c.y[1] + 2.0 * s * c.y[2]),
                Vec2(2.0 * c.x[2], 2.0 * c.y[2])};
          },
          [s](const PolylineCurve& c) {
            const auto n = static_cast<double>(c.points.size() - 1);
            const size_t k = std::min(static_cast<size_t>(s * n),
                                      c.points.size() - 2);
            const double t = s * n - static_cast<double>(k);
            const Vec2 d = c.points[k + 1] - c.points[k];
            return CurvePoint{c.points[k] + t * d, n * d, Vec2::Zero()};
          },
          [s](const ArcCurve& c) {
            const double sweep = c.end_angle - c.start_angle;
            const double a = c.start_angle + s * sweep;
            const Vec2 radial(std::cos(a), std::sin(a));
            const Vec2 tangent(-std::sin(a), std::cos(a));
            return CurvePoint{c.center + c.radius * radial,
                              c.radius * sweep * tangent,
                              -c.radius * sweep * sweep * radial};
          },
      },
      data_);
}

double Trajectory::MaxSpeed() const {
  return std::visit(
      Overloaded{
          [](const SegmentCurve& c) { return (c.to - c.from).norm(); },
          [](const QuadraticCurve& c) {
            // |d1| is convex along the affine d1, so it peaks at an end.
            const Vec2 d0(c.x[1], c.y[1]);
            const Vec2 d1(c.x[1] + 2.0 * c.x[2], c.y[1] + 2.0 * c.y[2]);
            return std::max(d0.norm(), d1.norm());
          },
          [](const PolylineCurve& c) {
            double longest = 0.0;
            for (size_t i = 1; i < c.points.size(); ++i) {
              longest = std::max(longest, (c.points[i] - c.points[i - 1]).norm());
            }
            return longest * static_cast<double>(c.points.size() - 1);
          },
          [](const ArcCurve& c) {
            return c.radius * std::abs(c.end_angle - c.start_angle);
          },
      },
      data_);
}

double Trajectory::Length(double s0, double s1) const {
  const std::vector<double> kinks = Kinks();
  QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  return Integrate([this](double s) { return Speed(s); }, s0, s1, spec,
                   kinks);
}

std::vector<double> Trajectory::Kinks() const {
  std::vector<double> out;
  if (const auto* poly = std::get_if<PolylineCurve>(&data_)) {
    const size_t n = poly->points.size() - 1;
    for (size_t k = 1; k < n; ++k) {
      out.push_back(static_cast<double>(k) / static_cast<double>(n));
    }
  }
  return out;
}

std::string Trajectory::FamilyName() const {
  return std::visit(
      Overloaded{
          [](const SegmentCurve&) { return std::string("segment"); },
          [](const QuadraticCurve&) { return std::string("quadratic"); },
          [](const PolylineCurve&) { return std::string("polyline"); },
          [](const ArcCurve&) { return std::string("arc"); },
      },
      data_);
}

double SignedCurvature(const CurvePoint& p) {
  const double speed = p.d1.norm();
  if (!(speed > 0.0)) throw RegularityError("tangent vanishes");
  return Cross(p.d1, p.d2) / (speed * speed * speed);
}

TubePoint TubeMap(const Trajectory& traj, double s, double theta,
                  double half_width) {
  if (!(half_width >= 0.0)) {
    throw DomainError("tube half-width must be non-negative");
  }
  if (!(std::abs(theta) <= half_width * (1.0 + 1e-12))) {
    throw DomainError("off-track distance exceeds the tube half-width");
  }
  const CurvePoint p = traj.Eval(s);
  const double speed = p.d1.norm();
  if (!(speed > 1e-12)) {
    throw RegularityError("tangent vanishes at s = " + std::to_string(s));
  }
  const Vec2 normal(-p.d1.y() / speed, p.d1.x() / speed);
  const double kappa = Cross(p.d1, p.d2) / (speed * speed * speed);
  return TubePoint{s, theta, p.position + theta * normal,
                   speed * std::abs(1.0 - kappa * theta)};
}

std::array<Trajectory, 3> BenchmarkPaths() {
  return {
      Trajectory::Segment(Vec2(0.0, 0.0), Vec2(5.0, 0.0), "mu_A"),
      Trajectory::Quadratic({0.0, 5.0, 0.0}, {0.0, 0.5, -0.5}, "mu_B"),
      Trajectory::Quadratic({0.0, 5.0, 0.0}, {0.0, 1.0, -1.0}, "mu_C"),
  };
}

}  // namespace riskdensity
