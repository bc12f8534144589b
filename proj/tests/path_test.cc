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

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "riskdensity/errors.h"
#include "riskdensity/path.h"

namespace riskdensity {
namespace {

std::vector<Trajectory> Families() {
  return {
      Trajectory::Segment(Vec2(-1, 2), Vec2(3, -1), "seg"),
      Trajectory::Quadratic({0.5, 2.0, -1.0}, {0.0, 1.5, 0.7}, "quad"),
      Trajectory::Arc(Vec2(1, 1), 2.0, 0.3, 2.5, "arc"),
      Trajectory::Arc(Vec2(0, 0), 1.5, 1.0, -2.0, "arc_cw"),
  };
}

TEST(TrajectoryTest, DerivativesMatchFiniteDifferences) {
  const double h = 1e-6;
  for (const auto& t : Families()) {
    for (double s : {0.1, 0.37, 0.5, 0.9}) {
      const CurvePoint p = t.Eval(s);
      const Vec2 fd1 = (t.Position(s + h) - t.Position(s - h)) / (2 * h);
      const Vec2 fd2 = (t.Eval(s + h).d1 - t.Eval(s - h).d1) / (2 * h);
      EXPECT_LT((p.d1 - fd1).norm(), 1e-7 * (1 + p.d1.norm())) << t.name();
      EXPECT_LT((p.d2 - fd2).norm(), 1e-6 * (1 + p.d2.norm())) << t.name();
    }
  }
}

TEST(TrajectoryTest, PolylineDerivativeIsRightHandedAtKnots) {
  const Trajectory t = Trajectory::Polyline(
      {Vec2(0, 0), Vec2(1, 0), Vec2(1, 2)}, "poly");
  EXPECT_TRUE(t.Eval(0.5).d1.isApprox(Vec2(0, 4)));
  EXPECT_TRUE(t.Eval(0.25).d1.isApprox(Vec2(2, 0)));
  EXPECT_TRUE(t.Eval(1.0).d1.isApprox(Vec2(0, 4)));
  EXPECT_TRUE(t.Position(0.75).isApprox(Vec2(1, 1)));
  ASSERT_EQ(t.Kinks().size(), 1u);
  EXPECT_DOUBLE_EQ(t.Kinks()[0], 0.5);
}

TEST(TrajectoryTest, OutsideUnitIntervalThrows) {
  const auto t = Families()[0];
  EXPECT_THROW(t.Eval(-1e-9), DomainError);
  EXPECT_THROW(t.Eval(1.0 + 1e-9), DomainError);
  EXPECT_THROW(t.Eval(std::nan("")), DomainError);
  EXPECT_NO_THROW(t.Eval(0.0));
  EXPECT_NO_THROW(t.Eval(1.0));
}

TEST(TrajectoryTest, InvalidShapesAreRejected) {
  EXPECT_THROW(Trajectory::Segment(Vec2(1, 1), Vec2(1, 1)), InvalidShapeError);
  EXPECT_THROW(Trajectory::Polyline({Vec2(0, 0)}), InvalidShapeError);
  EXPECT_THROW(Trajectory::Polyline({Vec2(0, 0), Vec2(0, 0)}),
               InvalidShapeError);
  EXPECT_THROW(Trajectory::Arc(Vec2(0, 0), -1.0, 0.0, 1.0), InvalidShapeError);
  EXPECT_THROW(Trajectory::Arc(Vec2(0, 0), 1.0, 1.0, 1.0), InvalidShapeError);
  EXPECT_THROW(Trajectory::Quadratic({0, std::nan(""), 0}, {0, 0, 0}),
               InvalidShapeError);
}

TEST(TrajectoryTest, LengthsMatchIndependentValues) {
  EXPECT_NEAR(Trajectory::Segment(Vec2(0, 0), Vec2(3, 4)).Length(), 5.0,
              1e-12);
  EXPECT_NEAR(Trajectory::Arc(Vec2(0, 0), 2.0, 0.0, 1.5).Length(), 3.0, 1e-10);
  EXPECT_NEAR(Trajectory::Polyline({Vec2(0, 0), Vec2(3, 0), Vec2(3, 4)})
                  .Length(),
              7.0, 1e-10);
  const Trajectory q = Trajectory::Quadratic({0, 5, 0}, {0, 1, -1});
  auto speed = [&](double s) { return q.Speed(s); };
  const double want =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          speed, 0.0, 1.0, 10, 1e-14);
  EXPECT_NEAR(q.Length(), want, 1e-10);
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  EXPECT_NEAR(q.Length(0.2, 0.6), GK::integrate(speed, 0.2, 0.6, 10, 1e-14),
              1e-10);
}

TEST(TrajectoryTest, MaxSpeedBoundsSampledSpeed) {
  for (const auto& t : Families()) {
    for (int i = 0; i <= 100; ++i) {
      EXPECT_LE(t.Speed(i / 100.0), t.MaxSpeed() * (1 + 1e-12)) << t.name();
    }
  }
}

TEST(CurvatureTest, ArcAndParabola) {
  const Trajectory ccw = Trajectory::Arc(Vec2(0, 0), 2.0, 0.0, 1.0);
  const Trajectory cw = Trajectory::Arc(Vec2(0, 0), 2.0, 1.0, 0.0);
  EXPECT_NEAR(SignedCurvature(ccw.Eval(0.4)), 0.5, 1e-12);
  EXPECT_NEAR(SignedCurvature(cw.Eval(0.4)), -0.5, 1e-12);
  const Trajectory p = Trajectory::Quadratic({0, 5, 0}, {0, 0.5, -0.5});
  // Apex: d1 = (5, 0), d2 = (0, -1).
  EXPECT_NEAR(SignedCurvature(p.Eval(0.5)), -5.0 / 125.0, 1e-15);
}

// |det| of the Jacobian of (s, theta) -> mu(s) + theta n(s), by central
// differences of the map itself.
double FdGamma(const Trajectory& t, double s, double theta, double half) {
  const double h = 1e-6;
  const Vec2 ds = (TubeMap(t, s + h, theta, half).position -
                   TubeMap(t, s - h, theta, half).position) /
                  (2 * h);
  const Vec2 dth = (TubeMap(t, s, theta + h, half + h).position -
                    TubeMap(t, s, theta - h, half + h).position) /
                   (2 * h);
  return std::abs(ds.x() * dth.y() - ds.y() * dth.x());
}

TEST(TubeMapTest, GammaIsJacobianDeterminant) {
  for (const auto& t : Families()) {
    for (double s : {0.2, 0.5, 0.8}) {
      for (double theta : {-0.3, 0.0, 0.25}) {
        const TubePoint p = TubeMap(t, s, theta, 0.3);
        EXPECT_NEAR(p.gamma, FdGamma(t, s, theta, 0.3), 1e-6 * (1 + p.gamma))
            << t.name() << " s=" << s << " theta=" << theta;
      }
    }
  }
}

TEST(TubeMapTest, OffsetsAlongUnitLeftNormal) {
  const Trajectory t = Trajectory::Segment(Vec2(0, 0), Vec2(5, 0));
  const TubePoint p = TubeMap(t, 0.5, 0.1, 0.1);
  EXPECT_TRUE(p.position.isApprox(Vec2(2.5, 0.1)));
  EXPECT_DOUBLE_EQ(p.gamma, 5.0);
}

TEST(TubeMapTest, FoldsAtCenterOfCurvature) {
  const Trajectory arc = Trajectory::Arc(Vec2(0, 0), 1.0, 0.0, 1.0);
  const TubePoint p = TubeMap(arc, 0.5, 1.0, 1.0);
  EXPECT_NEAR(p.gamma, 0.0, 1e-12);
  EXPECT_LT(p.position.norm(), 1e-12);
}

TEST(TubeMapTest, DomainAndRegularityErrors) {
  const Trajectory t = Families()[1];
  EXPECT_THROW(TubeMap(t, 0.5, 0.2, 0.1), DomainError);
  EXPECT_THROW(TubeMap(t, 0.5, 0.0, -1.0), DomainError);
  EXPECT_THROW(TubeMap(t, 1.5, 0.0, 0.1), DomainError);
  const Trajectory stall = Trajectory::Quadratic({0, 0, 1}, {0, 0, 0});
  EXPECT_THROW(TubeMap(stall, 0.0, 0.0, 0.1), RegularityError);
  EXPECT_NO_THROW(TubeMap(stall, 0.5, 0.0, 0.1));
}

TEST(BenchmarkPathsTest, EndpointsAndApexes) {
  const auto paths = BenchmarkPaths();
  const double apex[3] = {0.0, 0.125, 0.25};
  const char* names[3] = {"mu_A", "mu_B", "mu_C"};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(paths[i].name(), names[i]);
    EXPECT_LT((paths[i].Position(0.0) - Vec2(0, 0)).norm(), 1e-15);
    EXPECT_LT((paths[i].Position(1.0) - Vec2(5, 0)).norm(), 1e-15);
    EXPECT_NEAR(paths[i].Position(0.5).y(), apex[i], 1e-15);
    EXPECT_NEAR(paths[i].Position(0.5).x(), 2.5, 1e-15);
  }
}

TEST(TrajectoryTest, FamilyNames) {
  const auto f = Families();
  EXPECT_EQ(f[0].FamilyName(), "segment");
  EXPECT_EQ(f[1].FamilyName(), "quadratic");
  EXPECT_EQ(f[2].FamilyName(), "arc");
  EXPECT_EQ(Trajectory::Polyline({Vec2(0, 0), Vec2(1, 0)}).FamilyName(),
            "polyline");
}

}  // namespace
}  // namespace riskdensity
