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

#include "csv.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace riskdensity::cli {
namespace {

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

size_t Column(const CsvTable& t, const std::string& name) {
  for (size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) return i;
  }
  throw std::runtime_error("csv has no column '" + name + "'");
}

size_t IndexOf(const std::vector<std::string>& names, const std::string& n) {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == n) return i;
  }
  throw std::runtime_error("unknown trajectory '" + n + "' in csv");
}

size_t SigmaIndex(const std::vector<double>& sigmas, double s) {
  for (size_t i = 0; i < sigmas.size(); ++i) {
    if (sigmas[i] == s) return i;
  }
  throw std::runtime_error("unknown sigma " + FormatDouble(s) + " in csv");
}

Eigen::MatrixXd Collect(const CsvTable& t,
                        const std::vector<std::string>& trajectories,
                        const std::vector<double>& sigmas,
                        const std::string& column) {
  const size_t tc = Column(t, "trajectory");
  const size_t sc = Column(t, "sigma");
  const size_t vc = Column(t, column);
  Eigen::MatrixXd m(trajectories.size(), sigmas.size());
  Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(m.rows(), m.cols());
  for (const auto& row : t.rows) {
    const size_t i = IndexOf(trajectories, row.at(tc));
    const size_t j = SigmaIndex(sigmas, ParseDouble(row.at(sc)));
    m(i, j) = ParseDouble(row.at(vc));
    seen(i, j) = 1;
  }
  if (seen.minCoeff() == 0) throw std::runtime_error("csv is missing cells");
  return m;
}

}  // namespace

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double ParseDouble(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::runtime_error("not a number: '" + s + "'");
  }
  return v;
}

CsvTable ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) return t;
  t.header = Split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    t.rows.push_back(Split(line));
    if (t.rows.back().size() != t.header.size()) {
      throw std::runtime_error(path + ": ragged row");
    }
  }
  return t;
}

void WriteCsv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  auto write_row = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
  if (!out) throw std::runtime_error("cannot write " + path);
}

CsvTable ValuesTable(const MethodResult& m,
                     const std::vector<std::string>& trajectories,
                     const std::vector<double>& sigmas) {
  CsvTable t;
  t.header = {"method", "trajectory", "sigma", "value", "raw", "seconds"};
  for (size_t i = 0; i < trajectories.size(); ++i) {
    for (size_t j = 0; j < sigmas.size(); ++j) {
      t.rows.push_back({m.method, trajectories[i], FormatDouble(sigmas[j]),
                        FormatDouble(m.values(i, j)),
                        FormatDouble(m.raw(i, j)),
                        FormatDouble(m.seconds(i, j))});
    }
  }
  return t;
}

CsvTable ErrorsTable(const ErrorMetrics& e,
                     const std::vector<std::string>& trajectories,
                     const std::vector<double>& sigmas) {
  CsvTable t;
  t.header = {"trajectory", "sigma", "error"};
  for (size_t i = 0; i < trajectories.size(); ++i) {
    for (size_t j = 0; j < sigmas.size(); ++j) {
      t.rows.push_back({trajectories[i], FormatDouble(sigmas[j]),
                        FormatDouble(e.error(i, j))});
    }
  }
  return t;
}

CsvTable HeatmapTable(const Eigen::MatrixXd& m,
                      const std::vector<std::string>& trajectories,
                      const std::vector<double>& sigmas) {
  CsvTable t;
  t.header.push_back("trajectory");
  for (double s : sigmas) t.header.push_back(FormatDouble(s));
  for (size_t i = 0; i < trajectories.size(); ++i) {
    std::vector<std::string> row{trajectories[i]};
    for (size_t j = 0; j < sigmas.size(); ++j) {
      row.push_back(FormatDouble(m(i, j)));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Eigen::MatrixXd MatrixFromValues(const CsvTable& t,
                                 const std::vector<std::string>& trajectories,
                                 const std::vector<double>& sigmas,
                                 const std::string& column) {
  return Collect(t, trajectories, sigmas, column);
}

Eigen::MatrixXd MatrixFromErrors(const CsvTable& t,
                                 const std::vector<std::string>& trajectories,
                                 const std::vector<double>& sigmas) {
  return Collect(t, trajectories, sigmas, "error");
}

}  // namespace riskdensity::cli
