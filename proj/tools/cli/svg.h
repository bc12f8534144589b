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

#ifndef RISKDENSITY_TOOLS_CLI_SVG_H_
#define RISKDENSITY_TOOLS_CLI_SVG_H_

#include <string>
#include <vector>

#include <Eigen/Core>

namespace riskdensity::cli {

enum class ColorScale {
  kProbability,  // sequential on [0, 1]
  kSigned,       // diverging, symmetric around 0
};

// Heatmap with one row per trajectory and one column per sigma; each cell
// is labelled with its value.
std::string RenderHeatmapSvg(const std::string& title,
                             const std::vector<std::string>& rows,
                             const std::vector<double>& sigmas,
                             const Eigen::MatrixXd& m, ColorScale scale);

}  // namespace riskdensity::cli

#endif  // RISKDENSITY_TOOLS_CLI_SVG_H_
