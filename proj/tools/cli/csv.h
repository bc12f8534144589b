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

#ifndef RISKDENSITY_TOOLS_CLI_CSV_H_
#define RISKDENSITY_TOOLS_CLI_CSV_H_

#include <string>
#include <vector>

#include <Eigen/Core>

#include "riskdensity/bench.h"

namespace riskdensity::cli {

// Shortest form that parses back to the same double (17 significant
// digits), "nan" and "inf" included.
std::string FormatDouble(double v);
double ParseDouble(const std::string& s);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Plain comma separated text: no quoting, names never contain commas.
CsvTable ReadCsv(const std::string& path);
void WriteCsv(const std::string& path, const CsvTable& table);

// method,trajectory,sigma,value,raw,seconds
CsvTable ValuesTable(const MethodResult& m,
                     const std::vector<std::string>& trajectories,
                     const std::vector<double>& sigmas);
// trajectory,sigma,error
CsvTable ErrorsTable(const ErrorMetrics& e,
                     const std::vector<std::string>& trajectories,
                     const std::vector<double>& sigmas);
// trajectory,<one column per sigma>: the heatmap in matrix layout.
CsvTable HeatmapTable(const Eigen::MatrixXd& m,
                      const std::vector<std::string>& trajectories,
                      const std::vector<double>& sigmas);

// Rebuilds the value (or raw) matrix from a values table. Throws
// std::runtime_error when a cell is missing.
Eigen::MatrixXd MatrixFromValues(const CsvTable& t,
                                 const std::vector<std::string>& trajectories,
                                 const std::vector<double>& sigmas,
                                 const std::string& column = "value");
Eigen::MatrixXd MatrixFromErrors(const CsvTable& t,
                                 const std::vector<std::string>& trajectories,
                                 const std::vector<double>& sigmas);

}  // namespace riskdensity::cli

#endif  // RISKDENSITY_TOOLS_CLI_CSV_H_
