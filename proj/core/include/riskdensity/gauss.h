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

#ifndef RISKDENSITY_GAUSS_H_
#define RISKDENSITY_GAUSS_H_

#include "riskdensity/geometry.h"
#include "riskdensity/quadrature.h"
#include "riskdensity/rng.h"

namespace riskdensity {

// Bivariate normal distribution with symmetric positive definite
// covariance.
class Gaussian2 {
 public:
  // Throws CovarianceError if cov is not SPD or has non-finite entries.
  Gaussian2(const Vec2& mean, const Mat2& cov);

  static Gaussian2 Isotropic(const Vec2& mean, double variance);

  const Vec2& mean() const { return mean_; }
  const Mat2& cov() const { return cov_; }
  // Lower Cholesky factor L with cov = L L^T.
  const Mat2& chol() const { return chol_; }
  const Mat2& precision() const { return precision_; }
  double det() const { return det_; }

  bool IsDiagonal() const { return cov_(0, 1) == 0.0; }
  bool IsIsotropic() const {
    return IsDiagonal() && cov_(0, 0) == cov_(1, 1);
  }

  // Squared Mahalanobis distance of x from the mean.
  double Mahalanobis2(const Vec2& x) const;
  double Density(const Vec2& x) const;

  Gaussian2 WithMean(const Vec2& mean) const;

 private:
  Vec2 mean_;
  Mat2 cov_;
  Mat2 chol_;
  Mat2 precision_;
  double det_;
  double norm_;
};

// Throws CovarianceError unless the matrix is symmetric positive definite.
void ValidateCovariance(const Mat2& cov);

// Sigma_T = Sigma_R + Sigma_O. Throws CovarianceError on non-SPD input.
Mat2 CombineCovariance(const Mat2& sigma_r, const Mat2& sigma_o);

double PdfEval(const Gaussian2& g, const Vec2& x);

// Standard normal CDF, accurate in both tails.
double NormalCdf(double x);

// Gaussian mass of the closed disk |x - center| <= radius. Throws
// InvalidShapeError for radius <= 0 and ToleranceError if the nested
// polar quadrature does not converge.
double IntegrateDisk(const Gaussian2& g, const Vec2& center, double radius,
                     const QuadratureSpec& spec = {});

// Gaussian mass of the axis-aligned rectangle [lo, hi]; bounds may be
// infinite. Exact products of CDF differences for diagonal covariance,
// nested quadrature otherwise. Degenerate rectangles give 0.
double IntegrateRect(const Gaussian2& g, const Vec2& lo, const Vec2& hi,
                     const QuadratureSpec& spec = {});

// mean + L z with z a pair of independent standard normals.
Vec2 Sample(const Gaussian2& g, CounterRng& rng);

}  // namespace riskdensity

#endif  // RISKDENSITY_GAUSS_H_
