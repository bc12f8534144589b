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

#include "riskdensity/ground_truth_cache.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>
#include <type_traits>
#include <unistd.h>

#include "riskdensity/bench.h"
#include "riskdensity/errors.h"

namespace riskdensity {
namespace {

constexpr const char* kHeader = "riskdensity-ground-truth v1";

class Hasher {
 public:
  void Add(std::string_view s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
    Add('\n');
  }
  void Add(char c) {
    h_ ^= static_cast<unsigned char>(c);
    h_ *= 0x100000001b3ULL;
  }
  void Add(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    Add(std::string_view(buf));
  }
  void Add(const Vec2& v) {
    Add(v.x());
    Add(v.y());
  }
  uint64_t value() const { return h_; }

 private:
  uint64_t h_ = 0xcbf29ce484222325ULL;
};

void AddCurve(Hasher& h, const Trajectory& t) {
  h.Add(std::string_view(t.FamilyName()));
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SegmentCurve>) {
          h.Add(c.from);
          h.Add(c.to);
        } else if constexpr (std::is_same_v<T, QuadraticCurve>) {
          for (double v : c.x) h.Add(v);
          for (double v : c.y) h.Add(v);
        } else if constexpr (std::is_same_v<T, PolylineCurve>) {
          h.Add(static_cast<double>(c.points.size()));
          for (const Vec2& p : c.points) h.Add(p);
        } else {
          h.Add(c.center);
          h.Add(c.radius);
          h.Add(c.start_angle);
          h.Add(c.end_angle);
        }
      },
      t.data());
}

}  // namespace

GroundTruthCache::GroundTruthCache(std::string dir) : dir_(std::move(dir)) {}

uint64_t GroundTruthCache::Key(const BenchmarkConfig& cfg) {
  Hasher h;
  h.Add(std::string_view(kHeader));
  for (const auto& t : cfg.trajectories) AddCurve(h, t);
  h.Add('|');
  for (double s : cfg.sigma_values) h.Add(s);
  h.Add('|');
  h.Add(cfg.combined_radius());
  h.Add(cfg.obstacle_mean);
  h.Add(cfg.range.lo);
  h.Add(cfg.range.hi);
  h.Add(static_cast<double>(cfg.mc_trials));
  h.Add(std::string_view(std::to_string(cfg.mc_seed)));
  h.Add(cfg.mc_ds_max);
  return h.value();
}

std::string GroundTruthCache::PathFor(uint64_t key) const {
  char name[40];
  std::snprintf(name, sizeof(name), "mc-%016llx.txt",
                static_cast<unsigned long long>(key));
  return (std::filesystem::path(dir_) / name).string();
}

std::optional<Eigen::MatrixXd> GroundTruthCache::Load(uint64_t key) const {
  std::ifstream in(PathFor(key));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kHeader) return std::nullopt;
  std::string tag;
  unsigned long long stored = 0;
  long rows = 0;
  long cols = 0;
  if (!(in >> tag >> std::hex >> stored >> std::dec) || tag != "key" ||
      stored != key) {
    return std::nullopt;
  }
  if (!(in >> tag >> rows >> cols) || tag != "shape" || rows < 0 ||
      cols < 0) {
    return std::nullopt;
  }
  Eigen::MatrixXd m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) {
      if (!(in >> m(i, j))) return std::nullopt;
    }
  }
  return m;
}

void GroundTruthCache::Store(uint64_t key, const Eigen::MatrixXd& m) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw ResourceError("cannot create cache directory " + dir_);
  const std::string final_path = PathFor(key);
  const std::string tmp_path =
      final_path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path, std::ios::trunc);
    if (!out) throw ResourceError("cannot write " + tmp_path);
    char buf[40];
    out << kHeader << '\n';
    std::snprintf(buf, sizeof(buf), "key %016llx\n",
                  static_cast<unsigned long long>(key));
    out << buf;
    out << "shape " << m.rows() << ' ' << m.cols() << '\n';
    for (long i = 0; i < m.rows(); ++i) {
      for (long j = 0; j < m.cols(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
        out << (j ? " " : "") << buf;
      }
      out << '\n';
    }
    if (!out) throw ResourceError("cannot write " + tmp_path);
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp_path, ec);
    throw ResourceError("cannot publish " + final_path);
  }
}

}  // namespace riskdensity
