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

#include "config_io.h"

#include <fstream>
#include <set>
#include <type_traits>

#include "riskdensity/errors.h"

namespace riskdensity::cli {
namespace {

using nlohmann::json;

void CheckKeys(const json& obj, const std::string& where,
               const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void Read(const json& obj, const char* key, T& out) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

Vec2 ToVec2(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ConfigError(what + " must be a [x, y] pair");
  }
  return Vec2(j[0].get<double>(), j[1].get<double>());
}

json FromVec2(const Vec2& v) { return json::array({v.x(), v.y()}); }

std::vector<double> ReadSigmas(const json& j) {
  if (j.is_array()) {
    std::vector<double> out;
    for (const auto& v : j) {
      if (!v.is_number()) throw ConfigError("sigma_values must be numbers");
      out.push_back(v.get<double>());
    }
    return out;
  }
  if (j.is_object()) {
    CheckKeys(j, "sigma_values", {"logspace_lo", "logspace_hi", "count"});
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
    Read(j, "logspace_lo", lo);
    Read(j, "logspace_hi", hi);
    Read(j, "count", count);
    try {
      return LogSpace(lo, hi, count);
    } catch (const Error& e) {
      throw ConfigError(std::string("sigma_values: ") + e.what());
    }
  }
  throw ConfigError("sigma_values must be a list or a logspace table");
}

BoundMode ParseMode(const std::string& s) {
  if (s == "center") return BoundMode::kCenter;
  if (s == "max_point") return BoundMode::kMaxPoint;
  throw ConfigError("stagewise mode must be 'center' or 'max_point'");
}

}  // namespace

json TrajectoryToJson(const Trajectory& t) {
  json j;
  j["name"] = t.name();
  j["family"] = t.FamilyName();
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SegmentCurve>) {
          j["from"] = FromVec2(c.from);
          j["to"] = FromVec2(c.to);
        } else if constexpr (std::is_same_v<T, QuadraticCurve>) {
          j["x"] = c.x;
          j["y"] = c.y;
        } else if constexpr (std::is_same_v<T, PolylineCurve>) {
          json pts = json::array();
          for (const Vec2& p : c.points) pts.push_back(FromVec2(p));
          j["points"] = pts;
        } else {
          j["center"] = FromVec2(c.center);
          j["radius"] = c.radius;
          j["start_angle"] = c.start_angle;
          j["end_angle"] = c.end_angle;
        }
      },
      t.data());
  return j;
}

Trajectory TrajectoryFromJson(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw ConfigError("each trajectory needs a 'family' string");
  }
  const std::string family = j["family"].get<std::string>();
  std::string name;
  Read(j, "name", name);
  if (name.find_first_of(",\n\r\"") != std::string::npos) {
    throw ConfigError("trajectory names may not contain commas or quotes");
  }
  try {
    if (family == "segment") {
      CheckKeys(j, "segment trajectory", {"name", "family", "from", "to"});
      return Trajectory::Segment(ToVec2(j.at("from"), "from"),
                                 ToVec2(j.at("to"), "to"), name);
    }
    if (family == "quadratic") {
      CheckKeys(j, "quadratic trajectory", {"name", "family", "x", "y"});
      return Trajectory::Quadratic(j.at("x").get<std::array<double, 3>>(),
                                   j.at("y").get<std::array<double, 3>>(),
                                   name);
    }
    if (family == "polyline") {
      CheckKeys(j, "polyline trajectory", {"name", "family", "points"});
      std::vector<Vec2> pts;
      for (const auto& p : j.at("points")) pts.push_back(ToVec2(p, "point"));
      return Trajectory::Polyline(std::move(pts), name);
    }
    if (family == "arc") {
      CheckKeys(j, "arc trajectory",
                {"name", "family", "center", "radius", "start_angle",
                 "end_angle"});
      return Trajectory::Arc(ToVec2(j.at("center"), "center"),
                             j.at("radius").get<double>(),
                             j.at("start_angle").get<double>(),
                             j.at("end_angle").get<double>(), name);
    }
  } catch (const json::exception& e) {
    throw ConfigError("trajectory '" + name + "': " + e.what());
  } catch (const Error& e) {
    throw ConfigError("trajectory '" + name + "': " + e.what());
  }
  throw ConfigError("unknown trajectory family '" + family + "'");
}

BenchmarkConfig ConfigFromJson(const json& doc) {
  CheckKeys(doc, "config",
            {"trajectories", "sigma_values", "robot_radius", "obstacle_radius",
             "obstacle_mean", "param_range", "monte_carlo", "stagewise",
             "grid", "quadrature", "radius_sweep", "timing", "cache_dir"});
  BenchmarkConfig cfg = BenchmarkConfig::Default();

  if (auto it = doc.find("trajectories"); it != doc.end()) {
    if (!it->is_array()) throw ConfigError("trajectories must be a list");
    cfg.trajectories.clear();
    for (const auto& t : *it) cfg.trajectories.push_back(TrajectoryFromJson(t));
  }
  if (auto it = doc.find("sigma_values"); it != doc.end()) {
    cfg.sigma_values = ReadSigmas(*it);
  }
  Read(doc, "robot_radius", cfg.robot_radius);
  Read(doc, "obstacle_radius", cfg.obstacle_radius);
  if (auto it = doc.find("obstacle_mean"); it != doc.end()) {
    cfg.obstacle_mean = ToVec2(*it, "obstacle_mean");
  }
  if (auto it = doc.find("param_range"); it != doc.end()) {
    const Vec2 r = ToVec2(*it, "param_range");
    cfg.range = ParamRange{r.x(), r.y()};
  }
  if (auto it = doc.find("monte_carlo"); it != doc.end()) {
    CheckKeys(*it, "monte_carlo", {"trials", "seed", "ds_max", "threads"});
    Read(*it, "trials", cfg.mc_trials);
    Read(*it, "seed", cfg.mc_seed);
    Read(*it, "ds_max", cfg.mc_ds_max);
    Read(*it, "threads", cfg.mc_threads);
  }
  if (auto it = doc.find("stagewise"); it != doc.end()) {
    CheckKeys(*it, "stagewise", {"waypoints", "mode"});
    Read(*it, "waypoints", cfg.stagewise_n);
    std::string mode;
    Read(*it, "mode", mode);
    if (!mode.empty()) cfg.stagewise_mode = ParseMode(mode);
  }
  if (auto it = doc.find("grid"); it != doc.end()) {
    CheckKeys(*it, "grid", {"cell_sizes", "max_cells"});
    Read(*it, "cell_sizes", cfg.grid_cell_sizes);
    Read(*it, "max_cells", cfg.grid_max_cells);
  }
  if (auto it = doc.find("quadrature"); it != doc.end()) {
    CheckKeys(*it, "quadrature", {"rel_tol", "abs_tol", "max_subdivisions"});
    Read(*it, "rel_tol", cfg.quadrature.rel_tol);
    Read(*it, "abs_tol", cfg.quadrature.abs_tol);
    Read(*it, "max_subdivisions", cfg.quadrature.max_subdivisions);
  }
  if (auto it = doc.find("radius_sweep"); it != doc.end()) {
    CheckKeys(*it, "radius_sweep", {"min", "max", "count", "sigmas"});
    Read(*it, "min", cfg.sweep_radius_min);
    Read(*it, "max", cfg.sweep_radius_max);
    Read(*it, "count", cfg.sweep_radius_count);
    Read(*it, "sigmas", cfg.sweep_sigmas);
  }
  if (auto it = doc.find("timing"); it != doc.end()) {
    CheckKeys(*it, "timing", {"budget_seconds", "max_repeats"});
    Read(*it, "budget_seconds", cfg.timing_budget_seconds);
    Read(*it, "max_repeats", cfg.timing_max_repeats);
  }
  Read(doc, "cache_dir", cfg.cache_dir);

  try {
    cfg.Validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

json ConfigToJson(const BenchmarkConfig& cfg) {
  json doc;
  json trajs = json::array();
  for (const auto& t : cfg.trajectories) trajs.push_back(TrajectoryToJson(t));
  doc["trajectories"] = trajs;
  doc["sigma_values"] = cfg.sigma_values;
  doc["robot_radius"] = cfg.robot_radius;
  doc["obstacle_radius"] = cfg.obstacle_radius;
  doc["obstacle_mean"] = FromVec2(cfg.obstacle_mean);
  doc["param_range"] = json::array({cfg.range.lo, cfg.range.hi});
  doc["monte_carlo"] = {{"trials", cfg.mc_trials},
                        {"seed", cfg.mc_seed},
                        {"ds_max", cfg.mc_ds_max},
                        {"threads", cfg.mc_threads}};
  doc["stagewise"] = {
      {"waypoints", cfg.stagewise_n},
      {"mode", cfg.stagewise_mode == BoundMode::kCenter ? "center"
                                                        : "max_point"}};
  doc["grid"] = {{"cell_sizes", cfg.grid_cell_sizes},
                 {"max_cells", cfg.grid_max_cells}};
  doc["quadrature"] = {{"rel_tol", cfg.quadrature.rel_tol},
                       {"abs_tol", cfg.quadrature.abs_tol},
                       {"max_subdivisions", cfg.quadrature.max_subdivisions}};
  doc["radius_sweep"] = {{"min", cfg.sweep_radius_min},
                         {"max", cfg.sweep_radius_max},
                         {"count", cfg.sweep_radius_count},
                         {"sigmas", cfg.sweep_sigmas}};
  doc["timing"] = {{"budget_seconds", cfg.timing_budget_seconds},
                   {"max_repeats", cfg.timing_max_repeats}};
  doc["cache_dir"] = cfg.cache_dir;
  return doc;
}

BenchmarkConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return ConfigFromJson(doc);
}

}  // namespace riskdensity::cli
