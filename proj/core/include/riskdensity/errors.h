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

#ifndef RISKDENSITY_ERRORS_H_
#define RISKDENSITY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace riskdensity {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A shape with non-positive or non-finite size.
class InvalidShapeError : public Error {
 public:
  using Error::Error;
};

// A covariance that is not symmetric positive definite.
class CovarianceError : public Error {
 public:
  using Error::Error;
};

// A query outside the domain of a function (e.g. a curve parameter
// outside [0, 1]).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The tangent of a curve vanished where a normal direction was required.
class RegularityError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature did not reach its tolerance within the subdivision
// budget. The best available estimate is kept.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double best_estimate,
                 double error_estimate)
      : Error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// A computation would exceed a configured resource cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Two inputs whose shapes must agree do not.
class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace riskdensity

#endif  // RISKDENSITY_ERRORS_H_
