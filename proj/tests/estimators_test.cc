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
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "riskdensity/errors.h"
#include "riskdensity/estimators.h"

namespace riskdensity {
namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

double Phi(double x) {
  return boost::math::cdf(boost::math::normal_distribution<double>(), x);
}

// Gaussian mass of the rectangle [0, 5] x [-r, r] around an obstacle at
// (2.5, 0): the exact swept-strip value for the straight benchmark path.
double StripMass(double r, double var) {
  const double sd = std::sqrt(var);
  return (2.0 * Phi(r / sd) - 1.0) * (Phi(2.5 / sd) - Phi(-2.5 / sd));
}

Scenario StraightScenario(double var, double r = 0.1) {
  return Scenario::Isotropic(BenchmarkPaths()[0], Vec2(2.5, 0.0), r, var);
}

Scenario BenchScenario(int i, double var, double r = 0.1) {
  return Scenario::Isotropic(BenchmarkPaths()[i], Vec2(2.5, 0.0), r, var);
}

// Mass of disk(c_new) minus disk(c_prev) by vertical slices: conditional
// normal intervals in closed form, x integrated piecewise by tanh-sinh,
// which absorbs the square-root behaviour at the circle extremes.
double LuneOracle(const Gaussian2& g, const Vec2& cn, const Vec2& cp,
                  double r) {
  const double sxx = g.cov()(0, 0), sxy = g.cov()(0, 1), syy = g.cov()(1, 1);
  const double csd = std::sqrt(syy - sxy * sxy / sxx);
  auto slice = [&](double x) {
    const double hn2 = r * r - (x - cn.x()) * (x - cn.x());
    if (hn2 <= 0.0) return 0.0;
    const double m = g.mean().y() + sxy / sxx * (x - g.mean().x());
    auto mass = [&](double a, double b) {
      return b > a ? Phi((b - m) / csd) - Phi((a - m) / csd) : 0.0;
    };
    const double a1 = cn.y() - std::sqrt(hn2), b1 = cn.y() + std::sqrt(hn2);
    double inside = mass(a1, b1);
    const double hp2 = r * r - (x - cp.x()) * (x - cp.x());
    if (hp2 > 0.0) {
      const double a2 = cp.y() - std::sqrt(hp2), b2 = cp.y() + std::sqrt(hp2);
      inside -= mass(std::max(a1, a2), std::min(b1, b2));
    }
    const double zx = (x - g.mean().x()) / std::sqrt(sxx);
    return inside * std::exp(-0.5 * zx * zx) /
           std::sqrt(2.0 * std::numbers::pi * sxx);
  };
  std::vector<double> cuts = {cn.x() - r, cn.x() + r, cp.x() - r, cp.x() + r};
  // x-coordinates of the circle intersections.
  const Vec2 w = cn - cp;
  const double d = w.norm();
  if (d < 2 * r) {
    const double h = std::sqrt(r * r - 0.25 * d * d);
    const Vec2 mid = 0.5 * (cn + cp);
    const Vec2 perp(-w.y() / d, w.x() / d);
    cuts.push_back((mid + h * perp).x());
    cuts.push_back((mid - h * perp).x());
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = std::max(cuts[i], cn.x() - r);
    const double b = std::min(cuts[i + 1], cn.x() + r);
    if (b > a) total += boost::math::quadrature::tanh_sinh<double>().integrate(slice, a, b, 1e-12);
  }
  return total;
}

// ----------------------------------------------------------------------
// Single configurations and discrete combiners

TEST(PConfigTest, CenteredClosedForm) {
  const Scenario sc = StraightScenario(0.01);
  EXPECT_NEAR(PConfig(sc, 0.5), -std::expm1(-0.01 / 0.02), 1e-10);
}

TEST(PConfigTest, TranslationInvariant) {
  Mat2 cov;
  cov << 0.03, 0.01, 0.01, 0.02;
  const Vec2 shift(-7.0, 3.5);
  const Trajectory t = Trajectory::Quadratic({0, 1, 0.5}, {0, 0.2, 0.1});
  const Trajectory moved =
      Trajectory::Quadratic({shift.x(), 1, 0.5}, {shift.y(), 0.2, 0.1});
  const Scenario a(t, Vec2(0.6, 0.2), CombinedBody(0.15), cov);
  const Scenario b(moved, Vec2(0.6, 0.2) + shift, CombinedBody(0.15), cov);
  for (double s : {0.0, 0.3, 0.9}) {
    EXPECT_NEAR(PConfig(a, s), PConfig(b, s), 1e-12);
  }
  EXPECT_THROW(PConfig(a.WithRange({0.2, 0.4}), 0.5), DomainError);
}

TEST(CombineH1Test, Examples) {
  EXPECT_EQ(CombineH1(std::vector<double>{}), 0.0);
  EXPECT_NEAR(CombineH1(std::vector<double>{0.5, 0.5}), 0.75, 1e-15);
  EXPECT_EQ(CombineH1(std::vector<double>{0.2, 1.0, 0.3}), 1.0);
  EXPECT_NEAR(CombineH1(std::vector<double>{0.1, 0.7}), 0.73, 1e-15);
  EXPECT_THROW(CombineH1(std::vector<double>{0.2, 1.5}), DomainError);
  EXPECT_THROW(CombineH1(std::vector<double>{-0.1}), DomainError);
}

TEST(CombineH1Test, TinyProbabilitiesKeepPrecision) {
  const std::vector<double> p(1000, 1e-18);
  EXPECT_NEAR(CombineH1(p), 1e-15, 1e-27);
}

TEST(LuneMassTest, MatchesSliceOracle) {
  Mat2 cov;
  cov << 0.02, 0.008, 0.008, 0.03;
  const Gaussian2 g(Vec2(0.05, -0.02), cov);
  const double r = 0.1;
  for (const Vec2& step : {Vec2(0.01, 0.0), Vec2(0.05, 0.03),
                           Vec2(0.12, -0.09), Vec2(0.19, 0.0)}) {
    const Vec2 cp(-0.02, 0.01);
    const Vec2 cn = cp + step;
    EXPECT_NEAR(LuneMass(g, cn, cp, r), LuneOracle(g, cn, cp, r), 1e-9)
        << step.transpose();
  }
}

TEST(LuneMassTest, DegenerateCases) {
  const Gaussian2 g = Gaussian2::Isotropic(Vec2(0, 0), 0.01);
  EXPECT_EQ(LuneMass(g, Vec2(0.1, 0), Vec2(0.1, 0), 0.1), 0.0);
  EXPECT_NEAR(LuneMass(g, Vec2(0.3, 0), Vec2(0, 0), 0.1),
              IntegrateDisk(g, Vec2(0.3, 0), 0.1), 1e-15);
  EXPECT_THROW(LuneMass(g, Vec2(0, 0), Vec2(1, 0), 0.0), InvalidShapeError);
}

TEST(CombineH2Test, IdenticalConfigurationsEqualSingle) {
  const Scenario sc = StraightScenario(0.01);
  const std::vector<double> cfg = {0.5, 0.5};
  EXPECT_NEAR(CombineH2Discrete(sc, cfg), PConfig(sc, 0.5), 1e-12);
}

TEST(CombineH2Test, DisjointConfigurationsEqualH1) {
  const Scenario sc = StraightScenario(0.5);
  const std::vector<double> cfg = {0.1, 0.5, 0.9};
  std::vector<double> p;
  for (double s : cfg) p.push_back(PConfig(sc, s));
  EXPECT_NEAR(CombineH2Discrete(sc, cfg), CombineH1(p), 1e-12);
}

TEST(CombineH2Test, OverlappingMatchesOracle) {
  const Scenario sc = BenchScenario(2, 0.02);
  const std::vector<double> cfg = {0.48, 0.49, 0.5, 0.515};
  double free = 1.0 - PConfig(sc, cfg[0]);
  for (size_t i = 1; i < cfg.size(); ++i) {
    free *= 1.0 - LuneOracle(sc.noise(), sc.Offset(cfg[i]),
                             sc.Offset(cfg[i - 1]), sc.radius());
  }
  EXPECT_NEAR(CombineH2Discrete(sc, cfg), 1.0 - free, 1e-9);
}

TEST(CombineH2Test, RejectsUnsortedOrOutOfRange) {
  const Scenario sc = StraightScenario(0.01);
  EXPECT_THROW(CombineH2Discrete(sc, std::vector<double>{0.5, 0.4}),
               DomainError);
  EXPECT_THROW(CombineH2Discrete(sc, std::vector<double>{0.5, 1.5}),
               DomainError);
  EXPECT_EQ(CombineH2Discrete(sc, std::vector<double>{}), 0.0);
}

// ----------------------------------------------------------------------
// Monte Carlo

double BinomialSe(double p, int64_t n) {
  return std::sqrt(std::max(p * (1 - p), 1e-12) / static_cast<double>(n));
}

TEST(MonteCarloTest, StraightLineMatchesStripMass) {
  const Scenario sc = StraightScenario(0.01);
  const Estimate e = MonteCarloGroundTruth(sc);
  const double want = 2.0 * Phi(0.1 / 0.1) - 1.0;
  EXPECT_NEAR(want, 0.6827, 1e-4);
  EXPECT_NEAR(e.value, want, 3.0 * BinomialSe(want, 10000));
  EXPECT_EQ(e.method, "montecarlo");
  EXPECT_EQ(e.meta.at("trials"), 10000.0);
  EXPECT_DOUBLE_EQ(e.meta.at("ds_max"), 0.01);
}

TEST(MonteCarloTest, FarObstacleGivesZero) {
  const Scenario sc = Scenario::Isotropic(BenchmarkPaths()[0],
                                          Vec2(2.5, 10.0), 0.1, 1e-2);
  EXPECT_EQ(MonteCarloGroundTruth(sc).value, 0.0);
}

TEST(MonteCarloTest, DeterministicAcrossThreadCounts) {
  const Scenario sc = BenchScenario(1, 0.05);
  MonteCarloOptions a;
  a.trials = 5000;
  a.threads = 1;
  MonteCarloOptions b = a;
  b.threads = 3;
  const Estimate ea = MonteCarloGroundTruth(sc, a);
  EXPECT_EQ(ea.value, MonteCarloGroundTruth(sc, b).value);
  EXPECT_EQ(ea.value, MonteCarloGroundTruth(sc, a).value);
  b.seed = a.seed + 1;
  EXPECT_NE(ea.value, MonteCarloGroundTruth(sc, b).value);
}

TEST(MonteCarloTest, HalvingStepChangesLessThanNoise) {
  const Scenario sc = BenchScenario(2, 0.1);
  MonteCarloOptions coarse;
  MonteCarloOptions fine;
  fine.ds_max = sc.radius() / 20.0;
  const double pc = MonteCarloGroundTruth(sc, coarse).value;
  const double pf = MonteCarloGroundTruth(sc, fine).value;
  EXPECT_LE(pc, pf);
  EXPECT_LT(pf - pc, BinomialSe(pf, 10000));
}

TEST(MonteCarloTest, RejectsBadOptions) {
  const Scenario sc = StraightScenario(0.01);
  MonteCarloOptions o;
  o.trials = 0;
  EXPECT_THROW(MonteCarloGroundTruth(sc, o), DomainError);
  o = MonteCarloOptions{};
  o.ds_max = -1.0;
  EXPECT_NO_THROW(MonteCarloGroundTruth(sc, o));  // <= 0 selects r / 10
}

// ----------------------------------------------------------------------
// Tube integral, Volterra

TEST(NaiveParamTest, StraightLineIsExactStripMass) {
  for (double var : {1e-3, 1e-2, 0.1}) {
    const Estimate e = NaiveParamH3(StraightScenario(var));
    EXPECT_NEAR(e.raw, StripMass(0.1, var), 1e-9) << var;
  }
  EXPECT_NEAR(NaiveParamH3(StraightScenario(0.01)).value, 0.6827, 1e-4);
}

TEST(NaiveParamTest, CurvedPathMatchesNestedOracle) {
  const Scenario sc = BenchScenario(2, 0.02);
  const Trajectory& t = sc.trajectory();
  auto outer = [&](double s) {
    auto inner = [&](double th) {
      const TubePoint p = TubeMap(t, s, th, 0.1);
      return sc.noise().Density(p.position - sc.obstacle_mean()) * p.gamma;
    };
    return GK::integrate(inner, -0.1, 0.1, 15, 1e-13);
  };
  const double want = GK::integrate(outer, 0.0, 0.5, 15, 1e-12) +
                      GK::integrate(outer, 0.5, 1.0, 15, 1e-12);
  EXPECT_NEAR(NaiveParamH3(sc).raw, want, 1e-9);
}

TEST(NaiveParamTest, ZeroWidthTubeIsEmpty) {
  EXPECT_EQ(TubeIntegral(BenchScenario(1, 0.01), 0.0), 0.0);
}

TEST(NaiveParamTest, CurvedPathOverestimatesMonteCarlo) {
  const Scenario sc = BenchScenario(2, 1e-3);
  EXPECT_GE(NaiveParamH3(sc).value, MonteCarloGroundTruth(sc).value);
}

TEST(VolterraTest, SharesTheTubeIntegral) {
  for (int i = 0; i < 3; ++i) {
    for (double var : {1e-3, 0.05, 1.0}) {
      const Scenario sc = BenchScenario(i, var);
      const Estimate naive = NaiveParamH3(sc);
      const Estimate v = VolterraH2(sc);
      EXPECT_EQ(v.value, -std::expm1(-naive.raw));
      EXPECT_LE(v.value, std::min(naive.raw, 1.0));
    }
  }
  const Scenario far = Scenario::Isotropic(BenchmarkPaths()[0],
                                           Vec2(2.5, 50.0), 0.1, 1e-3);
  EXPECT_EQ(VolterraH2(far).value, 0.0);
}

// ----------------------------------------------------------------------
// Grid

TEST(GridTest, SingleCellCoveringSupport) {
  const Scenario sc = Scenario::Isotropic(
      Trajectory::Segment(Vec2(1, 1), Vec2(4, 1)), Vec2(2.5, 1.0), 0.1, 0.01);
  GridOptions o;
  o.cell_size = 64.0;
  const Estimate e = GridEstimate(sc, o);
  // The tube sits inside the cell [0, 64]^2, whose mass is a CDF product.
  const double sd = 0.1;
  const double want = (Phi((64 - 2.5) / sd) - Phi(-2.5 / sd)) *
                      (Phi((64 - 1.0) / sd) - Phi(-1.0 / sd));
  EXPECT_NEAR(e.value, want, 1e-14);
  EXPECT_EQ(e.meta.at("cells"), 1.0);
}

TEST(GridTest, ZeroMassCellsGiveZero) {
  const Scenario sc = Scenario::Isotropic(BenchmarkPaths()[0],
                                          Vec2(2.5, 500.0), 0.1, 1e-3);
  GridOptions o;
  o.cell_size = 1.0 / 16;
  EXPECT_EQ(GridEstimate(sc, o).value, 0.0);
}

TEST(GridTest, ConvergesAsCellsShrink) {
  const Scenario sc = StraightScenario(0.01);
  std::vector<double> v;
  for (int k = 5; k <= 9; ++k) {
    GridOptions o;
    o.cell_size = std::ldexp(1.0, -k);
    v.push_back(GridEstimate(sc, o).value);
  }
  EXPECT_LT(std::abs(v[4] - v[3]), std::abs(v[1] - v[0]));
  EXPECT_LT(std::abs(v[4] - v[3]), 0.01);
}

TEST(GridTest, ResourceCapAndBadCellSize) {
  GridOptions o;
  o.cell_size = 1e-4;
  o.max_cells = 1000;
  EXPECT_THROW(GridEstimate(StraightScenario(0.01), o), ResourceError);
  o.cell_size = 0.0;
  EXPECT_THROW(GridEstimate(StraightScenario(0.01), o), DomainError);
}

// ----------------------------------------------------------------------
// Stage-wise

TEST(StagewiseTest, SingleWaypointAtTheMean) {
  const Scenario sc = Scenario::Isotropic(
      Trajectory::Segment(Vec2(-1, 0), Vec2(1, 0)), Vec2(0, 0), 0.1, 0.01);
  const Estimate e = StagewiseEstimate(sc, 1);
  EXPECT_NEAR(e.raw, 0.5, 1e-14);
  EXPECT_EQ(StagewiseEstimate(sc, 1, BoundMode::kMaxPoint).raw, e.raw);
}

TEST(StagewiseTest, MaxPointDominatesCenter) {
  for (int i = 0; i < 3; ++i) {
    for (double var : {1e-3, 0.03, 1.0}) {
      const Scenario sc = BenchScenario(i, var);
      EXPECT_GE(StagewiseEstimate(sc, 50, BoundMode::kMaxPoint).raw,
                StagewiseEstimate(sc, 50, BoundMode::kCenter).raw);
    }
  }
}

TEST(StagewiseTest, DenseWaypointsSaturate) {
  const Estimate e = StagewiseEstimate(BenchScenario(2, 0.1), 300);
  EXPECT_EQ(e.value, 1.0);
  EXPECT_GT(e.raw, 1.0);
  EXPECT_THROW(StagewiseEstimate(BenchScenario(2, 0.1), 0), DomainError);
}

TEST(MaxDensityPointTest, IsotropicAndAnisotropic) {
  const Gaussian2 iso = Gaussian2::Isotropic(Vec2(0, 0), 0.1);
  EXPECT_TRUE(MaxDensityPoint(iso, Vec2(0.05, 0), 0.1).isApprox(Vec2(0, 0)));
  EXPECT_TRUE(MaxDensityPoint(iso, Vec2(1, 0), 0.1).isApprox(Vec2(0.9, 0)));

  Mat2 cov;
  cov << 0.2, 0.15, 0.15, 0.3;
  const Gaussian2 g(Vec2(0, 0), cov);
  const Vec2 c(0.8, -0.5);
  const double r = 0.2;
  double best = 0.0;
  for (int k = 0; k < 200000; ++k) {
    const double a = 2 * std::numbers::pi * k / 200000;
    best = std::max(best, g.Density(c + r * Vec2(std::cos(a), std::sin(a))));
  }
  const Vec2 p = MaxDensityPoint(g, c, r);
  EXPECT_LE((p - c).norm(), r * (1 + 1e-12));
  EXPECT_NEAR(g.Density(p), best, 1e-7 * best);
}

// ----------------------------------------------------------------------
// Risk density, sensitivity, updates

TEST(RiskDensityTest, StraightLineClosedForm) {
  const double var = 0.01;
  const double sd = std::sqrt(var);
  const double want = 2.0 / std::sqrt(2.0 * std::numbers::pi * var) *
                      (Phi(2.5 / sd) - Phi(-2.5 / sd));
  EXPECT_NEAR(RiskDensity(StraightScenario(var)), want, 1e-9 * want);
  EXPECT_NEAR(want, 7.9788, 1e-4);
}

TEST(RiskDensityTest, CurvedPathMatchesBoost) {
  const Scenario sc = BenchScenario(1, 0.004);
  auto f = [&](double s) {
    const CurvePoint p = sc.trajectory().Eval(s);
    return sc.noise().Density(p.position - sc.obstacle_mean()) * p.d1.norm();
  };
  const double want = 2.0 * (GK::integrate(f, 0.0, 0.5, 20, 1e-14) +
                             GK::integrate(f, 0.5, 1.0, 20, 1e-14));
  EXPECT_NEAR(RiskDensity(sc), want, 1e-9 * want);
}

TEST(RiskDensityTest, FarObstacleIsZero) {
  const Scenario sc = Scenario::Isotropic(BenchmarkPaths()[0],
                                          Vec2(2.5, 10.0), 0.1, 1e-2);
  EXPECT_LT(RiskDensity(sc), 1e-100);
  EXPECT_EQ(RiskDensityEstimate(sc).value, RiskDensity(sc) * 0.1);
}

TEST(RiskDensityTest, ReparametrizationInvariant) {
  // Same geometric segment traversed as x = 5 s^2 (zero speed at s = 0).
  const Trajectory squared = Trajectory::Quadratic({0, 0, 5}, {0, 0, 0});
  const Scenario a = StraightScenario(0.01);
  const Scenario b = Scenario::Isotropic(squared, Vec2(2.5, 0.0), 0.1, 0.01);
  EXPECT_NEAR(RiskDensity(a), RiskDensity(b), 1e-8);
}

TEST(RiskDensityEstimateTest, ScaleLinearityAndSaturation) {
  const Scenario sc = StraightScenario(0.01);
  const Estimate e1 = RiskDensityEstimate(sc);
  EXPECT_NEAR(e1.value, 0.79788, 1e-5);
  EXPECT_EQ(e1.meta.at("scale"), 0.1);
  const Estimate e2 = RiskDensityEstimate(sc, 0.2);
  EXPECT_DOUBLE_EQ(e2.raw, 2.0 * e1.raw);
  EXPECT_EQ(e2.value, 1.0);
}

TEST(SensitivityTest, EqualsRiskDensityAtZeroWidth) {
  for (int i = 0; i < 3; ++i) {
    for (double var : {1e-3, 1e-2, 1e-1, 1.0}) {
      const Scenario sc = BenchScenario(i, var);
      const double rd = RiskDensity(sc);
      EXPECT_NEAR(Sensitivity(sc, 0.0, Hypothesis::kH3), rd, 1e-8);
      EXPECT_NEAR(Sensitivity(sc, 0.0, Hypothesis::kH2), rd, 1e-8);
    }
  }
}

TEST(SensitivityTest, MatchesFiniteDifferenceOfTubeIntegral) {
  const Scenario sc = StraightScenario(0.01);
  const double t = 0.05, h = 1e-4;
  const double fd = (TubeIntegral(sc, t + h) - TubeIntegral(sc, t - h)) / (2 * h);
  const double s3 = Sensitivity(sc, t, Hypothesis::kH3);
  EXPECT_NEAR(s3, fd, 1e-3 * fd);
  // Straight line: both edges carry N(+-T) over the path, closed form.
  const double want = 2.0 * std::exp(-t * t / 0.02) /
                      std::sqrt(2 * std::numbers::pi * 0.01) *
                      (Phi(25.0) - Phi(-25.0));
  EXPECT_NEAR(s3, want, 1e-9 * want);
}

TEST(SensitivityTest, H2BelowH3) {
  for (int i = 0; i < 3; ++i) {
    const Scenario sc = BenchScenario(i, 0.02);
    for (double t : {0.01, 0.1, 0.3}) {
      const double h3 = Sensitivity(sc, t, Hypothesis::kH3);
      const double h2 = Sensitivity(sc, t, Hypothesis::kH2);
      EXPECT_LE(h2, h3);
      EXPECT_NEAR(h2, h3 * std::exp(-TubeIntegral(sc, t)), 1e-12 * h3);
    }
  }
  EXPECT_THROW(Sensitivity(StraightScenario(0.1), -0.1, Hypothesis::kH3),
               DomainError);
}

TEST(CpUpdateTest, Definitions) {
  const Scenario sc = StraightScenario(0.1);
  EXPECT_EQ(CpUpdate(0.3, sc, 0.1, 0.0, UpdateMode::kRiskDensity), 0.3);
  const double rd = RiskDensity(sc);
  EXPECT_DOUBLE_EQ(CpUpdate(0.3, sc, 0.1, 0.01, UpdateMode::kRiskDensity),
                   0.3 + rd * 0.01);
  EXPECT_DOUBLE_EQ(CpUpdate(0.3, sc, 0.1, 0.01, UpdateMode::kSensitivityH3),
                   0.3 + Sensitivity(sc, 0.1, Hypothesis::kH3) * 0.01);
  EXPECT_DOUBLE_EQ(CpUpdate(0.3, sc, 0.1, 0.01, UpdateMode::kSensitivityH2),
                   0.3 + Sensitivity(sc, 0.1, Hypothesis::kH2) * 0.01);
  EXPECT_EQ(CpUpdate(0.99, sc, 0.1, 1.0, UpdateMode::kRiskDensity), 1.0);
  EXPECT_EQ(CpUpdate(0.01, sc, 0.1, -1.0, UpdateMode::kRiskDensity), 0.0);
  EXPECT_THROW(CpUpdate(1.2, sc, 0.1, 0.0, UpdateMode::kRiskDensity),
               DomainError);
}

TEST(EstimateTest, FromRawSaturates) {
  const Estimate e = Estimate::FromRaw("x", 1.7, 0.0);
  EXPECT_EQ(e.value, 1.0);
  EXPECT_EQ(e.raw, 1.7);
  EXPECT_EQ(Estimate::FromRaw("x", -1e-18, 0.0).raw, 0.0);
}

}  // namespace
}  // namespace riskdensity
