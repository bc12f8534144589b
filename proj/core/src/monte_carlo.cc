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
#include <thread>
#include <vector>

#include "riskdensity/estimators.h"
#include "riskdensity/gauss.h"
#include "riskdensity/rng.h"

namespace riskdensity {
namespace {

// Path samples bucketed on a uniform grid so each trial only inspects the
// samples near the drawn obstacle position.
class PathIndex {
 public:
  PathIndex(std::vector<Vec2> points, double radius)
      : points_(std::move(points)), radius_(radius) {
    lo_ = hi_ = points_.front();
    for (const Vec2& p : points_) {
      lo_ = lo_.cwiseMin(p);
      hi_ = hi_.cwiseMax(p);
    }
    const Vec2 extent = (hi_ - lo_).cwiseMax(Vec2::Constant(radius_));
    constexpr double kMaxBuckets = 4e6;
    cell_ = std::max(radius_, std::sqrt(extent.x() * extent.y() / kMaxBuckets));
    nx_ = static_cast<int>(extent.x() / cell_) + 1;
    ny_ = static_cast<int>(extent.y() / cell_) + 1;
    reach_ = static_cast<int>(std::ceil(radius_ / cell_));

    std::vector<int> counts(static_cast<size_t>(nx_) * ny_ + 1, 0);
    for (const Vec2& p : points_) ++counts[Bucket(p) + 1];
    for (size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
    offsets_ = counts;
    order_.resize(points_.size());
    std::vector<int> fill(counts.begin(), counts.end() - 1);
    for (size_t i = 0; i < points_.size(); ++i) {
      order_[fill[Bucket(points_[i])]++] = static_cast<int>(i);
    }
  }

  // True iff some sample lies within the radius (closed) of x.
  bool Hits(const Vec2& x) const {
    if (x.x() < lo_.x() - radius_ || x.x() > hi_.x() + radius_ ||
        x.y() < lo_.y() - radius_ || x.y() > hi_.y() + radius_) {
      return false;
    }
    const int bx = static_cast<int>(std::floor((x.x() - lo_.x()) / cell_));
    const int by = static_cast<int>(std::floor((x.y() - lo_.y()) / cell_));
    const double r2 = radius_ * radius_;
    for (int ix = std::max(0, bx - reach_); ix <= std::min(nx_ - 1, bx + reach_);
         ++ix) {
      for (int iy = std::max(0, by - reach_);
           iy <= std::min(ny_ - 1, by + reach_); ++iy) {
        const size_t b = static_cast<size_t>(ix) * ny_ + iy;
        for (int k = offsets_[b]; k < offsets_[b + 1]; ++k) {
          if ((points_[order_[k]] - x).squaredNorm() <= r2) return true;
        }
      }
    }
    return false;
  }

 private:
  size_t Bucket(const Vec2& p) const {
    const int ix = std::min(nx_ - 1, static_cast<int>((p.x() - lo_.x()) / cell_));
    const int iy = std::min(ny_ - 1, static_cast<int>((p.y() - lo_.y()) / cell_));
    return static_cast<size_t>(ix) * ny_ + iy;
  }

  std::vector<Vec2> points_;
  double radius_;
  Vec2 lo_;
  Vec2 hi_;
  double cell_ = 0.0;
  int nx_ = 0;
  int ny_ = 0;
  int reach_ = 1;
  std::vector<int> offsets_;
  std::vector<int> order_;
};

}  // namespace

Estimate MonteCarloGroundTruth(const Scenario& sc,
                               const MonteCarloOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (opts.trials < 1) throw DomainError("Monte Carlo needs at least 1 trial");
  const double ds_max = opts.ds_max > 0.0 ? opts.ds_max : sc.radius() / 10.0;

  // Uniform parameter steps small enough that consecutive positions are at
  // most ds_max apart.
  const ParamRange range = sc.range();
  const double travel = sc.trajectory().MaxSpeed() * range.width();
  const auto steps = std::max<int64_t>(
      1, static_cast<int64_t>(std::ceil(travel / ds_max)));
  std::vector<Vec2> samples;
  samples.reserve(static_cast<size_t>(steps) + 1);
  for (int64_t k = 0; k <= steps; ++k) {
    const double s = k == steps ? range.hi
                                : range.lo + range.width() *
                                                 static_cast<double>(k) /
                                                 static_cast<double>(steps);
    samples.push_back(sc.trajectory().Position(s));
  }
  const PathIndex index(std::move(samples), sc.radius());
  const Gaussian2 obstacle = sc.noise().WithMean(sc.obstacle_mean());

  int threads = opts.threads > 0
                    ? opts.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(
      std::clamp<int64_t>(threads, 1, std::max<int64_t>(1, opts.trials / 256)));

  // Trial i always draws from stream i, so the count is independent of how
  // trials are split across workers.
  std::vector<int64_t> hits(static_cast<size_t>(threads), 0);
  auto work = [&](int worker) {
    const int64_t begin = opts.trials * worker / threads;
    const int64_t end = opts.trials * (worker + 1) / threads;
    int64_t local = 0;
    for (int64_t i = begin; i < end; ++i) {
      CounterRng rng(opts.seed, static_cast<uint64_t>(i));
      if (index.Hits(Sample(obstacle, rng))) ++local;
    }
    hits[static_cast<size_t>(worker)] = local;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  int64_t total = 0;
  for (int64_t h : hits) total += h;

  const double n = static_cast<double>(opts.trials);
  const double p = static_cast<double>(total) / n;
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return Estimate::FromRaw(std::string(kMonteCarlo), p, elapsed,
                           {{"trials", n},
                            {"seed", static_cast<double>(opts.seed)},
                            {"ds_max", ds_max},
                            {"path_samples", static_cast<double>(steps + 1)},
                            {"collisions", static_cast<double>(total)},
                            {"std_error", std::sqrt(p * (1.0 - p) / n)}});
}

}  // namespace riskdensity
