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

#ifndef RISKDENSITY_SRC_PEAKS_H_
#define RISKDENSITY_SRC_PEAKS_H_

#include <vector>

#include "riskdensity/scenario.h"

namespace riskdensity::internal {

// Parameter values that seed adaptive quadrature along the path: the
// local minima of the Mahalanobis distance between the path and the
// obstacle, a few along-track standard deviations around each, and the
// curve's kinks. Without them a narrow density peak can fall between the
// nodes of the initial panels.
std::vector<double> PathBreakpoints(const Scenario& sc);

}  // namespace riskdensity::internal

#endif  // RISKDENSITY_SRC_PEAKS_H_
