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
#include <array>
#include <chrono>
#include <cmath>
#include <vector>

#include "peaks.h"
#include "riskdensity/errors.h"
#include "riskdensity/estimators.h"

namespace riskdensity {
namespace {

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Frame of the tube map at one path parameter, in the difference domain.
struct Frame {
  Vec2 offset;  // mu_R(s) - mu_O
  Vec2 normal;  // unit left normal
  double speed;
  double kappa;
};

Frame FrameAt(const Scenario& sc, double s) {
  const CurvePoint p = sc.trajectory().Eval(s);
  const double speed = p.d1.norm();
  if (!(speed > 1e-12)) {
    throw RegularityError("tangent vanishes at s = " + std::to_string(s));
  }
  const double cross = p.d1.x() * p.d2.y() - p.d1.y() * p.d2.x();
  return {p.position - sc.obstacle_mean(),
          Vec2(-p.d1.y() / speed, p.d1.x() / speed), speed,
          cross / (speed * speed * speed)};
}

// N(Phi(s, nu) - mu_O | 0, Sigma_T) * Gamma(s, nu).
double TubeIntegrand(const Scenario& sc, const Frame& f, double nu) {
  return sc.noise().Density(f.offset + nu * f.normal) * f.speed *
         std::abs(1.0 - f.kappa * nu);
}

}  // namespace

double TubeIntegral(const Scenario& sc, double half_width,
                    const QuadratureSpec& q) {
  if (!(half_width >= 0.0)) {
    throw DomainError("tube half-width must be non-negative");
  }
  q.Validate();
  const ParamRange range = sc.range();
  if (half_width == 0.0 || range.width() == 0.0) return 0.0;

  const QuadratureSpec inner = q.Tightened(1e-2);
  const Mat2& precision = sc.noise().precision();
  auto slice = [&](double s) {
    const Frame f = FrameAt(sc, s);
    // Peak of the density along the normal line, and the fold of the map
    // where 1 - kappa nu changes sign.
    std::array<double, 2> breaks{};
    int n = 0;
    const double pn = f.normal.dot(precision * f.normal);
    breaks[n++] = -f.normal.dot(precision * f.offset) / pn;
    if (f.kappa != 0.0) breaks[n++] = 1.0 / f.kappa;
    return Integrate([&](double nu) { return TubeIntegrand(sc, f, nu); },
                     -half_width, half_width, inner, std::span(breaks.data(), n));
  };
  const std::vector<double> breaks = internal::PathBreakpoints(sc);
  return Integrate(slice, range.lo, range.hi, q, breaks);
}

Estimate NaiveParamH3(const Scenario& sc, const QuadratureSpec& q) {
  const auto start = std::chrono::steady_clock::now();
  const double integral = TubeIntegral(sc, sc.radius(), q);
  return Estimate::FromRaw(std::string(kParametrization), integral,
                           Seconds(start),
                           {{"half_width", sc.radius()},
                            {"rel_tol", q.rel_tol}});
}

Estimate VolterraH2(const Scenario& sc, const QuadratureSpec& q) {
  const auto start = std::chrono::steady_clock::now();
  const double integral = TubeIntegral(sc, sc.radius(), q);
  return Estimate::FromRaw(std::string(kVolterra), -std::expm1(-integral),
                           Seconds(start),
                           {{"half_width", sc.radius()},
                            {"tube_integral", integral},
                            {"rel_tol", q.rel_tol}});
}

double RiskDensity(const Scenario& sc, const QuadratureSpec& q) {
  q.Validate();
  const ParamRange range = sc.range();
  if (range.width() == 0.0) return 0.0;
  const Trajectory& traj = sc.trajectory();
  const Gaussian2& noise = sc.noise();
  const Vec2 mu_o = sc.obstacle_mean();
  auto integrand = [&](double s) {
    const CurvePoint p = traj.Eval(s);
    return noise.Density(p.position - mu_o) * p.d1.norm();
  };
  const std::vector<double> breaks = internal::PathBreakpoints(sc);
  return 2.0 * Integrate(integrand, range.lo, range.hi, q, breaks);
}

Estimate RiskDensityEstimate(const Scenario& sc, double scale,
                             const QuadratureSpec& q) {
  const auto start = std::chrono::steady_clock::now();
  const double length_scale = scale > 0.0 ? scale : sc.radius();
  const double rd = RiskDensity(sc, q);
  return Estimate::FromRaw(std::string(kRiskDensity), rd * length_scale,
                           Seconds(start),
                           {{"risk_density", rd}, {"scale", length_scale}});
}

double Sensitivity(const Scenario& sc, double half_width, Hypothesis h,
                   const QuadratureSpec& q) {
  if (!(half_width >= 0.0)) {
    throw DomainError("tube half-width must be non-negative");
  }
  q.Validate();
  const ParamRange range = sc.range();
  if (range.width() == 0.0) return 0.0;
  // Leibniz rule: d/dT of the tube integral is the integrand on both edges.
  auto edges = [&](double s) {
    const Frame f = FrameAt(sc, s);
    return TubeIntegrand(sc, f, half_width) + TubeIntegrand(sc, f, -half_width);
  };
  const std::vector<double> breaks = internal::PathBreakpoints(sc);
  const double h3 = Integrate(edges, range.lo, range.hi, q, breaks);
  if (h == Hypothesis::kH3) return h3;
  return h3 * std::exp(-TubeIntegral(sc, half_width, q));
}

double CpUpdate(double p_prev, const Scenario& sc, double t_prev, double dt,
                UpdateMode mode, const QuadratureSpec& q) {
  if (!(p_prev >= 0.0 && p_prev <= 1.0)) {
    throw DomainError("previous probability must lie in [0, 1]");
  }
  if (dt == 0.0) return p_prev;
  double slope = 0.0;
  switch (mode) {
    case UpdateMode::kSensitivityH2:
      slope = Sensitivity(sc, t_prev, Hypothesis::kH2, q);
      break;
    case UpdateMode::kSensitivityH3:
      slope = Sensitivity(sc, t_prev, Hypothesis::kH3, q);
      break;
    case UpdateMode::kRiskDensity:
      slope = RiskDensity(sc, q);
      break;
  }
  return std::clamp(p_prev + slope * dt, 0.0, 1.0);
}

}  // namespace riskdensity
