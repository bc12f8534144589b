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
#include <cmath>
#include <numbers>
#include <vector>

#include "riskdensity/errors.h"
#include "riskdensity/estimators.h"
#include "riskdensity/gauss.h"

namespace riskdensity {
namespace {

double DirectionAngle(const Vec2& v) { return std::atan2(v.y(), v.x()); }

double WrapAngle(double a) {
  a = std::fmod(a, 2.0 * std::numbers::pi);
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

}  // namespace

double PConfig(const Scenario& sc, double s, const QuadratureSpec& q) {
  if (!sc.range().Contains(s)) {
    throw DomainError("configuration outside the scenario range");
  }
  return IntegrateDisk(sc.noise(), sc.Offset(s), sc.radius(), q);
}

double CombineH1(std::span<const double> probs) {
  double log_free = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("probabilities must lie in [0, 1]");
    }
    if (p == 1.0) return 1.0;
    log_free += std::log1p(-p);
  }
  return -std::expm1(log_free);
}

double LuneMass(const Gaussian2& g, const Vec2& c_new, const Vec2& c_prev,
                double radius, const QuadratureSpec& q) {
  if (!(radius > 0.0)) throw InvalidShapeError("radius must be positive");
  const Vec2 w = c_new - c_prev;
  const double dist = w.norm();
  if (dist == 0.0) return 0.0;
  if (dist > 2.0 * radius) return IntegrateDisk(g, c_new, radius, q);

  // Angular kinks of the clipped radial limits: directions from c_new to
  // the two circle intersections and, when c_new lies outside the previous
  // disk, the tangent directions.
  std::vector<double> breaks;
  const Vec2 mid = 0.5 * (c_new + c_prev);
  const double h = std::sqrt(std::max(0.0, radius * radius - 0.25 * dist * dist));
  const Vec2 perp(-w.y() / dist, w.x() / dist);
  for (double sgn : {-1.0, 1.0}) {
    breaks.push_back(WrapAngle(DirectionAngle(mid + sgn * h * perp - c_new)));
  }
  if (dist > radius) {
    const double half_cone = std::asin(radius / dist);
    const double axis = DirectionAngle(-w);
    breaks.push_back(WrapAngle(axis - half_cone));
    breaks.push_back(WrapAngle(axis + half_cone));
  }
  breaks.push_back(WrapAngle(DirectionAngle(g.mean() - c_new)));

  const QuadratureSpec inner = q.Tightened(1e-2);
  auto radial = [&](double phi) {
    const Vec2 u(std::cos(phi), std::sin(phi));
    auto f = [&](double rho) { return g.Density(c_new + rho * u) * rho; };
    const double uw = u.dot(w);
    const double disc = uw * uw - dist * dist + radius * radius;
    if (disc <= 0.0) return Integrate(f, 0.0, radius, inner);
    const double root = std::sqrt(disc);
    const double ex_lo = std::max(0.0, -uw - root);
    const double ex_hi = std::min(radius, -uw + root);
    if (ex_lo >= ex_hi) return Integrate(f, 0.0, radius, inner);
    double total = 0.0;
    if (ex_lo > 0.0) total += Integrate(f, 0.0, ex_lo, inner);
    if (ex_hi < radius) total += Integrate(f, ex_hi, radius, inner);
    return total;
  };
  const double mass =
      Integrate(radial, 0.0, 2.0 * std::numbers::pi, q, breaks);
  return std::clamp(mass, 0.0, 1.0);
}

double CombineH2Discrete(const Scenario& sc, std::span<const double> configs,
                         const QuadratureSpec& q) {
  if (configs.empty()) return 0.0;
  for (size_t i = 0; i < configs.size(); ++i) {
    if (!sc.range().Contains(configs[i])) {
      throw DomainError("configuration outside the scenario range");
    }
    if (i > 0 && configs[i] < configs[i - 1]) {
      throw DomainError("configurations must be sorted");
    }
  }
  std::vector<double> charges;
  charges.reserve(configs.size());
  charges.push_back(PConfig(sc, configs.front(), q));
  for (size_t i = 1; i < configs.size(); ++i) {
    charges.push_back(LuneMass(sc.noise(), sc.Offset(configs[i]),
                               sc.Offset(configs[i - 1]), sc.radius(), q));
  }
  return CombineH1(charges);
}

}  // namespace riskdensity
