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

#ifndef RISKDENSITY_TOOLS_CLI_CONFIG_IO_H_
#define RISKDENSITY_TOOLS_CLI_CONFIG_IO_H_

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "riskdensity/bench.h"

namespace riskdensity::cli {

// Malformed or inconsistent configuration file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Keys absent from the document keep their BenchmarkConfig::Default()
// values; unknown keys are rejected so typos do not pass silently.
BenchmarkConfig ConfigFromJson(const nlohmann::json& doc);
nlohmann::json ConfigToJson(const BenchmarkConfig& cfg);

// Throws ConfigError for unreadable or invalid files.
BenchmarkConfig LoadConfig(const std::string& path);

nlohmann::json TrajectoryToJson(const Trajectory& t);
Trajectory TrajectoryFromJson(const nlohmann::json& j);

}  // namespace riskdensity::cli

#endif  // RISKDENSITY_TOOLS_CLI_CONFIG_IO_H_
