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
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "riskdensity/errors.h"
#include "riskdensity/estimators.h"
#include "riskdensity/gauss.h"

namespace riskdensity {
namespace {

// Squared distance from p to the closed box [lo, hi].
double BoxDistance2(const Vec2& p, const Vec2& lo, const Vec2& hi) {
  const Vec2 d = (lo - p).cwiseMax(p - hi).cwiseMax(Vec2::Zero());
  return d.squaredNorm();
}

double SegmentDistance2(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t =
      len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (a + t * ab - p).squaredNorm();
}

// Liang-Barsky test of segment [a, b] against the closed box.
bool SegmentHitsBox(const Vec2& a, const Vec2& b, const Vec2& lo,
                    const Vec2& hi) {
  double t0 = 0.0;
  double t1 = 1.0;
  const Vec2 d = b - a;
  for (int axis = 0; axis < 2; ++axis) {
    const double p[2] = {-d[axis], d[axis]};
    const double q[2] = {a[axis] - lo[axis], hi[axis] - a[axis]};
    for (int k = 0; k < 2; ++k) {
      if (p[k] == 0.0) {
        if (q[k] < 0.0) return false;
      } else {
        const double t = q[k] / p[k];
        if (p[k] < 0.0) {
          t0 = std::max(t0, t);
        } else {
          t1 = std::min(t1, t);
        }
      }
    }
  }
  return t0 <= t1;
}

// Closed square and closed segment within distance r of each other.
bool CellTouches(const Vec2& a, const Vec2& b, const Vec2& lo, const Vec2& hi,
                 double r2) {
  if (BoxDistance2(a, lo, hi) <= r2 || BoxDistance2(b, lo, hi) <= r2) {
    return true;
  }
  if (SegmentHitsBox(a, b, lo, hi)) return true;
  const Vec2 corners[4] = {lo, Vec2(hi.x(), lo.y()), hi, Vec2(lo.x(), hi.y())};
  for (const Vec2& c : corners) {
    if (SegmentDistance2(c, a, b) <= r2) return true;
  }
  return false;
}

// Probability mass of each unit interval [k h, (k + 1) h] along one axis.
std::vector<double> AxisMasses(int64_t first, int64_t count, double h,
                               double mean, double sd) {
  std::vector<double> out(static_cast<size_t>(count));
  auto sf = [&](double x) {
    return 0.5 * std::erfc((x - mean) / (sd * std::numbers::sqrt2));
  };
  for (int64_t k = 0; k < count; ++k) {
    const double a = static_cast<double>(first + k) * h;
    const double b = a + h;
    // Difference taken on the tail side that avoids cancellation.
    out[static_cast<size_t>(k)] =
        a >= mean ? sf(a) - sf(b)
                  : (b <= mean ? sf(2.0 * mean - b) - sf(2.0 * mean - a)
                               : 1.0 - sf(b) - sf(2.0 * mean - a));
  }
  return out;
}

}  // namespace

Estimate GridEstimate(const Scenario& sc, const GridOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const double h = opts.cell_size;
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("cell size must be positive");
  }
  const ParamRange range = sc.range();
  const double r = sc.radius();
  const Trajectory& traj = sc.trajectory();

  // Polyline through the path with chords shorter than a cell.
  const double travel = traj.MaxSpeed() * range.width();
  const auto n_seg = std::max<int64_t>(
      1, static_cast<int64_t>(std::ceil(travel / (0.5 * h))));
  std::vector<double> params;
  params.reserve(static_cast<size_t>(n_seg) + 1);
  for (int64_t k = 0; k <= n_seg; ++k) {
    params.push_back(k == n_seg ? range.hi
                                : range.lo + range.width() *
                                                 static_cast<double>(k) /
                                                 static_cast<double>(n_seg));
  }
  for (double kink : traj.Kinks()) {
    if (kink > range.lo && kink < range.hi) params.push_back(kink);
  }
  std::sort(params.begin(), params.end());
  std::vector<Vec2> pts;
  pts.reserve(params.size());
  for (double s : params) pts.push_back(traj.Position(s));

  Vec2 lo = pts.front();
  Vec2 hi = pts.front();
  for (const Vec2& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const auto ix0 = static_cast<int64_t>(std::floor((lo.x() - r) / h));
  const auto iy0 = static_cast<int64_t>(std::floor((lo.y() - r) / h));
  const auto ix1 = static_cast<int64_t>(std::floor((hi.x() + r) / h));
  const auto iy1 = static_cast<int64_t>(std::floor((hi.y() + r) / h));
  const int64_t nx = ix1 - ix0 + 1;
  const int64_t ny = iy1 - iy0 + 1;
  if (static_cast<double>(nx) * static_cast<double>(ny) >
      static_cast<double>(opts.max_cells)) {
    throw ResourceError("grid of " + std::to_string(nx) + " x " +
                        std::to_string(ny) + " cells exceeds the cap of " +
                        std::to_string(opts.max_cells));
  }

  std::vector<bool> touched(static_cast<size_t>(nx * ny), false);
  const double r2 = r * r;
  for (size_t k = 0; k + 1 < pts.size(); ++k) {
    const Vec2& a = pts[k];
    const Vec2& b = pts[k + 1];
    const Vec2 blo = a.cwiseMin(b) - Vec2::Constant(r);
    const Vec2 bhi = a.cwiseMax(b) + Vec2::Constant(r);
    const int64_t cx0 = std::max(ix0, static_cast<int64_t>(std::floor(blo.x() / h)));
    const int64_t cx1 = std::min(ix1, static_cast<int64_t>(std::floor(bhi.x() / h)));
    const int64_t cy0 = std::max(iy0, static_cast<int64_t>(std::floor(blo.y() / h)));
    const int64_t cy1 = std::min(iy1, static_cast<int64_t>(std::floor(bhi.y() / h)));
    for (int64_t cx = cx0; cx <= cx1; ++cx) {
      for (int64_t cy = cy0; cy <= cy1; ++cy) {
        const size_t idx = static_cast<size_t>((cx - ix0) * ny + (cy - iy0));
        if (touched[idx]) continue;
        const Vec2 clo(static_cast<double>(cx) * h, static_cast<double>(cy) * h);
        const Vec2 chi = clo + Vec2::Constant(h);
        if (CellTouches(a, b, clo, chi, r2)) touched[idx] = true;
      }
    }
  }

  const Gaussian2 obstacle = sc.noise().WithMean(sc.obstacle_mean());
  double log_free = 0.0;
  int64_t cells = 0;
  bool certain = false;
  if (obstacle.IsDiagonal()) {
    const std::vector<double> mx =
        AxisMasses(ix0, nx, h, obstacle.mean().x(), std::sqrt(obstacle.cov()(0, 0)));
    const std::vector<double> my =
        AxisMasses(iy0, ny, h, obstacle.mean().y(), std::sqrt(obstacle.cov()(1, 1)));
    for (int64_t cx = 0; cx < nx; ++cx) {
      for (int64_t cy = 0; cy < ny; ++cy) {
        if (!touched[static_cast<size_t>(cx * ny + cy)]) continue;
        ++cells;
        const double p = std::clamp(mx[cx] * my[cy], 0.0, 1.0);
        if (p >= 1.0) certain = true;
        log_free += std::log1p(-p);
      }
    }
  } else {
    for (int64_t cx = 0; cx < nx; ++cx) {
      for (int64_t cy = 0; cy < ny; ++cy) {
        if (!touched[static_cast<size_t>(cx * ny + cy)]) continue;
        ++cells;
        const Vec2 clo(static_cast<double>(cx + ix0) * h,
                       static_cast<double>(cy + iy0) * h);
        const double p =
            IntegrateRect(obstacle, clo, clo + Vec2::Constant(h));
        if (p >= 1.0) certain = true;
        log_free += std::log1p(-p);
      }
    }
  }
  const double prob = certain ? 1.0 : -std::expm1(log_free);
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return Estimate::FromRaw(std::string(kGrid), prob, elapsed,
                           {{"cell_size", h},
                            {"cells", static_cast<double>(cells)}});
}

}  // namespace riskdensity
