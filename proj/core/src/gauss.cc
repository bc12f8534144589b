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

#include "riskdensity/gauss.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "riskdensity/errors.h"

namespace riskdensity {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Upper tail Q(z) = 1 - Phi(z).
double NormalSf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

// Phi(b) - Phi(a) for a <= b, evaluated on the side of the distribution
// that avoids cancellation.
double NormalInterval(double a, double b) {
  if (a >= 0.0) return NormalSf(a) - NormalSf(b);
  if (b <= 0.0) return NormalSf(-b) - NormalSf(-a);
  return 1.0 - NormalSf(-a) - NormalSf(b);
}

double Clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

void ValidateCovariance(const Mat2& cov) {
  if (!cov.allFinite()) {
    throw CovarianceError("covariance has non-finite entries");
  }
  const double scale = std::max(std::abs(cov(0, 0)), std::abs(cov(1, 1)));
  if (std::abs(cov(0, 1) - cov(1, 0)) > 1e-12 * std::max(scale, 1e-300)) {
    throw CovarianceError("covariance is not symmetric");
  }
  const double det = cov(0, 0) * cov(1, 1) - cov(0, 1) * cov(1, 0);
  if (!(cov(0, 0) > 0.0) || !(det > 0.0)) {
    throw CovarianceError("covariance is not positive definite");
  }
}

Gaussian2::Gaussian2(const Vec2& mean, const Mat2& cov) : mean_(mean) {
  if (!mean.allFinite()) throw CovarianceError("mean must be finite");
  ValidateCovariance(cov);
  cov_ = 0.5 * (cov + cov.transpose());
  det_ = cov_(0, 0) * cov_(1, 1) - cov_(0, 1) * cov_(0, 1);
  const double l00 = std::sqrt(cov_(0, 0));
  const double l10 = cov_(1, 0) / l00;
  const double l11 = std::sqrt(cov_(1, 1) - l10 * l10);
  chol_ << l00, 0.0, l10, l11;
  precision_ << cov_(1, 1), -cov_(0, 1), -cov_(1, 0), cov_(0, 0);
  precision_ /= det_;
  norm_ = 1.0 / (2.0 * std::numbers::pi * std::sqrt(det_));
}

Gaussian2 Gaussian2::Isotropic(const Vec2& mean, double variance) {
  return Gaussian2(mean, variance * Mat2::Identity());
}

double Gaussian2::Mahalanobis2(const Vec2& x) const {
  const Vec2 d = x - mean_;
  return d.dot(precision_ * d);
}

double Gaussian2::Density(const Vec2& x) const {
  return norm_ * std::exp(-0.5 * Mahalanobis2(x));
}

Gaussian2 Gaussian2::WithMean(const Vec2& mean) const {
  Gaussian2 out = *this;
  if (!mean.allFinite()) throw CovarianceError("mean must be finite");
  out.mean_ = mean;
  return out;
}

Mat2 CombineCovariance(const Mat2& sigma_r, const Mat2& sigma_o) {
  ValidateCovariance(sigma_r);
  ValidateCovariance(sigma_o);
  return sigma_r + sigma_o;
}

double PdfEval(const Gaussian2& g, const Vec2& x) { return g.Density(x); }

double NormalCdf(double x) { return NormalSf(-x); }

double IntegrateDisk(const Gaussian2& g, const Vec2& center, double radius,
                     const QuadratureSpec& spec) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw InvalidShapeError("disk radius must be positive");
  }
  spec.Validate();
  const QuadratureSpec inner_spec = spec.Tightened(1e-2);
  const Vec2 to_mean = g.mean() - center;
  const double phi0 = std::atan2(to_mean.y(), to_mean.x());
  // Seed the angular partition at the direction of the mean and its
  // opposite, where the angular profile peaks and bottoms out.
  std::array<double, 2> angle_breaks{};
  int n_breaks = 0;
  for (double phi : {phi0, phi0 + std::numbers::pi}) {
    double wrapped = std::fmod(phi, 2.0 * std::numbers::pi);
    if (wrapped < 0.0) wrapped += 2.0 * std::numbers::pi;
    angle_breaks[n_breaks++] = wrapped;
  }

  auto radial = [&](double phi) {
    const Vec2 u(std::cos(phi), std::sin(phi));
    const double peak = std::clamp(to_mean.dot(u), 0.0, radius);
    const std::array<double, 1> rb{peak};
    return Integrate(
        [&](double rho) { return g.Density(center + rho * u) * rho; }, 0.0,
        radius, inner_spec, rb);
  };
  const double mass = Integrate(radial, 0.0, 2.0 * std::numbers::pi, spec,
                                std::span(angle_breaks.data(), n_breaks));
  return Clamp01(mass);
}

double IntegrateRect(const Gaussian2& g, const Vec2& lo, const Vec2& hi,
                     const QuadratureSpec& spec) {
  if (lo.hasNaN() || hi.hasNaN()) throw DomainError("rectangle bound is NaN");
  if (lo.x() > hi.x() || lo.y() > hi.y()) {
    throw DomainError("rectangle requires lo <= hi componentwise");
  }
  if (lo.x() == hi.x() || lo.y() == hi.y()) return 0.0;

  const double sx = std::sqrt(g.cov()(0, 0));
  const double sy = std::sqrt(g.cov()(1, 1));
  if (g.IsDiagonal()) {
    const double px = NormalInterval((lo.x() - g.mean().x()) / sx,
                                     (hi.x() - g.mean().x()) / sx);
    const double py = NormalInterval((lo.y() - g.mean().y()) / sy,
                                     (hi.y() - g.mean().y()) / sy);
    return Clamp01(px * py);
  }

  // Correlated case: integrate the x-marginal against the conditional
  // y-interval probability, which is available in closed form.
  spec.Validate();
  const double cxx = g.cov()(0, 0);
  const double cxy = g.cov()(0, 1);
  const double cond_sd = std::sqrt(g.det() / cxx);
  const double span_x = 40.0 * sx;
  const double a = std::max(lo.x(), g.mean().x() - span_x);
  const double b = std::min(hi.x(), g.mean().x() + span_x);
  if (a >= b) return 0.0;
  auto slice = [&](double x) {
    const double zx = (x - g.mean().x()) / sx;
    const double marginal =
        std::exp(-0.5 * zx * zx) / (sx * std::sqrt(2.0 * std::numbers::pi));
    const double cond_mean = g.mean().y() + cxy / cxx * (x - g.mean().x());
    const double ylo = lo.y() == -kInf ? -kInf : (lo.y() - cond_mean) / cond_sd;
    const double yhi = hi.y() == kInf ? kInf : (hi.y() - cond_mean) / cond_sd;
    return marginal * NormalInterval(ylo, yhi);
  };
  const std::array<double, 1> breaks{g.mean().x()};
  return Clamp01(Integrate(slice, a, b, spec, breaks));
}

Vec2 Sample(const Gaussian2& g, CounterRng& rng) {
  const double z0 = rng.Normal();
  const double z1 = rng.Normal();
  return g.mean() + g.chol() * Vec2(z0, z1);
}

}  // namespace riskdensity
