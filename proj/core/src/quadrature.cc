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

#include "riskdensity/quadrature.h"

#include <stdexcept>

namespace riskdensity {

void QuadratureSpec::Validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw std::invalid_argument("quadrature tolerances must be positive");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("max_subdivisions must be at least 1");
  }
}

QuadratureSpec QuadratureSpec::Tightened(double factor) const {
  QuadratureSpec out = *this;
  out.rel_tol *= factor;
  out.abs_tol *= factor;
  return out;
}

}  // namespace riskdensity
