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
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "peaks.h"

namespace riskdensity::internal {
namespace {

constexpr int kScan = 64;

// Polynomial piece o(s) = a + b s + c s^2 of the offset between path and
// obstacle, valid on [lo, hi].
struct OffsetPiece {
  Vec2 a;
  Vec2 b;
  Vec2 c;
  double lo;
  double hi;
};

// Appends the local minima over [lo, hi] of D(s) = o(s)' P o(s). D'/2 is
// a cubic, so its sign changes are bracketed between the roots of its
// derivative and then solved with TOMS 748. Returns false when D is
// constant.
bool PieceMinima(const OffsetPiece& piece, const Mat2& p,
                 std::vector<double>& out) {
  const double k0 = piece.a.dot(p * piece.b);
  const double k1 = 2.0 * piece.a.dot(p * piece.c) + piece.b.dot(p * piece.b);
  const double k2 = 3.0 * piece.b.dot(p * piece.c);
  const double k3 = 2.0 * piece.c.dot(p * piece.c);
  auto g = [&](double s) { return ((k3 * s + k2) * s + k1) * s + k0; };
  const double scale = std::abs(k0) + std::abs(k1) + std::abs(k2) +
                       std::abs(k3);
  if (scale == 0.0) return false;

  std::array<double, 4> knots{piece.lo, piece.hi};
  size_t n = 2;
  auto add = [&](double s) {
    if (s > piece.lo && s < piece.hi) knots[n++] = s;
  };
  // Roots of g'(s) = k1 + 2 k2 s + 3 k3 s^2.
  const double qa = 3.0 * k3;
  const double qb = 2.0 * k2;
  const double qc = k1;
  if (qa != 0.0) {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
      if (q != 0.0) add(qc / q);
      add(q / qa);
    }
  } else if (qb != 0.0) {
    add(-qc / qb);
  }
  std::sort(knots.begin(), knots.begin() + static_cast<std::ptrdiff_t>(n));

  if (g(piece.lo) > 0.0) out.push_back(piece.lo);
  for (size_t i = 0; i + 1 < n; ++i) {
    const double u = knots[i];
    const double v = knots[i + 1];
    const double gu = g(u);
    const double gv = g(v);
    if (!(gu < 0.0 && gv > 0.0)) continue;
    std::uintmax_t iters = 60;
    const auto root = boost::math::tools::toms748_solve(
        g, u, v, gu, gv, boost::math::tools::eps_tolerance<double>(40), iters);
    out.push_back(0.5 * (root.first + root.second));
  }
  if (g(piece.hi) < 0.0) out.push_back(piece.hi);
  return true;
}

// Offset pieces for families whose position is polynomial in s.
std::optional<std::vector<OffsetPiece>> PolynomialPieces(const Scenario& sc) {
  const ParamRange range = sc.range();
  const Vec2 mu = sc.obstacle_mean();
  const CurveData& data = sc.trajectory().data();
  std::vector<OffsetPiece> out;
  if (const auto* seg = std::get_if<SegmentCurve>(&data)) {
    out.push_back({seg->from - mu, seg->to - seg->from, Vec2::Zero(),
                   range.lo, range.hi});
  } else if (const auto* quad = std::get_if<QuadraticCurve>(&data)) {
    out.push_back({Vec2(quad->x[0], quad->y[0]) - mu,
                   Vec2(quad->x[1], quad->y[1]),
                   Vec2(quad->x[2], quad->y[2]), range.lo, range.hi});
  } else if (const auto* poly = std::get_if<PolylineCurve>(&data)) {
    const size_t n = poly->points.size() - 1;
    const double step = 1.0 / static_cast<double>(n);
    for (size_t k = 0; k < n; ++k) {
      const double s0 = static_cast<double>(k) * step;
      const double s1 = k + 1 == n ? 1.0 : static_cast<double>(k + 1) * step;
      const double lo = std::max(s0, range.lo);
      const double hi = std::min(s1, range.hi);
      if (lo > hi) continue;
      const Vec2 b = (poly->points[k + 1] - poly->points[k]) / step;
      out.push_back({poly->points[k] - b * s0 - mu, b, Vec2::Zero(), lo, hi});
    }
  } else {
    return std::nullopt;
  }
  return out;
}

std::vector<double> ScannedMinima(const Scenario& sc) {
  const ParamRange range = sc.range();
  const Gaussian2& noise = sc.noise();
  auto distance2 = [&](double s) { return noise.Mahalanobis2(sc.Offset(s)); };

  std::vector<double> grid(kScan + 1);
  std::vector<double> values(kScan + 1);
  for (int i = 0; i <= kScan; ++i) {
    grid[i] = i == kScan ? range.hi : range.lo + range.width() * i / kScan;
    values[i] = distance2(grid[i]);
  }
  std::vector<double> out;
  for (int i = 0; i <= kScan; ++i) {
    const bool left_ok = i == 0 || values[i] <= values[i - 1];
    const bool right_ok = i == kScan || values[i] < values[i + 1];
    if (!left_ok || !right_ok) continue;

    // Golden-section refinement inside the neighbouring scan cells.
    double a = grid[std::max(0, i - 1)];
    double b = grid[std::min(kScan, i + 1)];
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = distance2(c);
    double fd = distance2(d);
    for (int it = 0; it < 40 && b - a > 1e-12; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = distance2(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = distance2(d);
      }
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

}  // namespace

std::vector<double> PathBreakpoints(const Scenario& sc) {
  const ParamRange range = sc.range();
  std::vector<double> out = sc.trajectory().Kinks();
  if (range.width() == 0.0) return out;

  const Gaussian2& noise = sc.noise();
  std::vector<double> minima;
  bool solved = false;
  if (auto pieces = PolynomialPieces(sc)) {
    solved = true;
    for (const OffsetPiece& piece : *pieces) {
      if (!PieceMinima(piece, noise.precision(), minima)) {
        solved = false;
        break;
      }
    }
  }
  if (!solved) minima = ScannedMinima(sc);

  for (double s_star : minima) {
    out.push_back(s_star);
    const CurvePoint p = sc.trajectory().Eval(s_star);
    const double speed = p.d1.norm();
    if (speed > 0.0) {
      const Vec2 t = p.d1 / speed;
      const double along_sd = std::sqrt(t.dot(noise.cov() * t)) / speed;
      for (double k : {1.0, 3.0, 6.0}) {
        out.push_back(s_star - k * along_sd);
        out.push_back(s_star + k * along_sd);
      }
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](double s) {
                             return !(s > range.lo && s < range.hi);
                           }),
            out.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace riskdensity::internal
