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

#ifndef RISKDENSITY_GROUND_TRUTH_CACHE_H_
#define RISKDENSITY_GROUND_TRUTH_CACHE_H_

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>

namespace riskdensity {

struct BenchmarkConfig;

// Content-addressed store of Monte Carlo matrices. Files carry a versioned
// header and are written to a temporary name then renamed, so concurrent
// readers never observe a partial file.
class GroundTruthCache {
 public:
  explicit GroundTruthCache(std::string dir);

  // Key over every input that affects the Monte Carlo matrix.
  static uint64_t Key(const BenchmarkConfig& cfg);

  std::optional<Eigen::MatrixXd> Load(uint64_t key) const;
  void Store(uint64_t key, const Eigen::MatrixXd& m) const;
  std::string PathFor(uint64_t key) const;

 private:
  std::string dir_;
};

}  // namespace riskdensity

#endif  // RISKDENSITY_GROUND_TRUTH_CACHE_H_
