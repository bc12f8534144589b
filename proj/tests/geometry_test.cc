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
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "riskdensity/errors.h"
#include "riskdensity/geometry.h"

namespace riskdensity {
namespace {

TEST(DiskTest, RejectsNonPositiveOrNonFiniteRadius) {
  EXPECT_THROW(Disk(0.0), InvalidShapeError);
  EXPECT_THROW(Disk(-1.0), InvalidShapeError);
  EXPECT_THROW(Disk(std::numeric_limits<double>::infinity()),
               InvalidShapeError);
  EXPECT_THROW(Disk(1.0, Vec2(std::nan(""), 0.0)), InvalidShapeError);
}

TEST(MinkowskiTest, RadiiAdd) {
  EXPECT_DOUBLE_EQ(MinkowskiCombine(0.05, 0.05).radius(), 0.1);
  EXPECT_DOUBLE_EQ(MinkowskiCombine(Disk(0.3), Disk(0.2)).radius(), 0.5);
  EXPECT_THROW(MinkowskiCombine(0.0, 0.1), InvalidShapeError);
}

TEST(MinkowskiTest, NominalCentersDoNotMatter) {
  const auto a = MinkowskiCombine(Disk(0.3, Vec2(1, 2)), Disk(0.2, Vec2(-4, 7)));
  EXPECT_DOUBLE_EQ(a.radius(), 0.5);
}

TEST(CombinedBodyTest, Area) {
  EXPECT_DOUBLE_EQ(CombinedBody(0.1).Area(), std::numbers::pi * 0.01);
}

TEST(CollisionCheckTest, BoundaryCountsAsContact) {
  const CombinedBody body(1.0);
  // Obstacle displaced by exactly the combined radius.
  EXPECT_TRUE(CollisionCheck(Vec2(0, 0), Vec2(1, 0), body));
  EXPECT_TRUE(CollisionCheck(Vec2(0, 0), Vec2(0.6, 0.8), body));
  EXPECT_FALSE(CollisionCheck(Vec2(0, 0), Vec2(1.0 + 1e-12, 0), body));
}

TEST(CollisionCheckTest, NoiseCancelsNominalOffset) {
  const CombinedBody body(0.1);
  EXPECT_TRUE(CollisionCheck(Vec2(3, -2), Vec2(3, -2), body));
  EXPECT_FALSE(CollisionCheck(Vec2(3, -2), Vec2(0, 0), body));
}

}  // namespace
}  // namespace riskdensity
