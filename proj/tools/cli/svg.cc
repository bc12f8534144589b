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

#include "svg.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace riskdensity::cli {
namespace {

struct Rgb {
  double r, g, b;
};

Rgb Lerp(const Rgb& a, const Rgb& b, double t) {
  return {a.r + (b.r - a.r) * t, a.g + (b.g - a.g) * t,
          a.b + (b.b - a.b) * t};
}

// Piecewise-linear through a few anchors of a perceptual ramp.
Rgb Sequential(double t) {
  static constexpr std::array<Rgb, 5> kRamp = {{{68, 1, 84},
                                                {59, 82, 139},
                                                {33, 145, 140},
                                                {94, 201, 98},
                                                {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (kRamp.size() - 1);
  const size_t k = std::min(static_cast<size_t>(t), kRamp.size() - 2);
  return Lerp(kRamp[k], kRamp[k + 1], t - static_cast<double>(k));
}

Rgb Diverging(double t) {
  const Rgb blue{49, 54, 149};
  const Rgb white{247, 247, 247};
  const Rgb red{165, 0, 38};
  t = std::clamp(t, -1.0, 1.0);
  return t < 0 ? Lerp(white, blue, -t) : Lerp(white, red, t);
}

std::string Hex(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(std::lround(c.r)),
                static_cast<int>(std::lround(c.g)),
                static_cast<int>(std::lround(c.b)));
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Short(double v, const char* fmt) {
  if (std::isnan(v)) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

std::string RenderHeatmapSvg(const std::string& title,
                             const std::vector<std::string>& rows,
                             const std::vector<double>& sigmas,
                             const Eigen::MatrixXd& m, ColorScale scale) {
  constexpr int kCell = 64;
  constexpr int kLeft = 90;
  constexpr int kTop = 40;
  constexpr int kBottom = 50;
  const int width = kLeft + kCell * static_cast<int>(sigmas.size()) + 20;
  const int height = kTop + kCell * static_cast<int>(rows.size()) + kBottom;

  double span = 1.0;
  if (scale == ColorScale::kSigned) {
    span = 0.0;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      if (std::isfinite(m(i))) span = std::max(span, std::abs(m(i)));
    }
    if (span == 0.0) span = 1.0;
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\">\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-size=\"16\">" << Escape(title) << "</text>\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const int y = kTop + kCell * static_cast<int>(i);
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + kCell / 2 + 5
        << "\" text-anchor=\"end\" font-size=\"13\">" << Escape(rows[i])
        << "</text>\n";
    for (size_t j = 0; j < sigmas.size(); ++j) {
      const int x = kLeft + kCell * static_cast<int>(j);
      const double v = m(static_cast<Eigen::Index>(i),
                         static_cast<Eigen::Index>(j));
      Rgb fill{200, 200, 200};
      if (std::isfinite(v)) {
        fill = scale == ColorScale::kProbability ? Sequential(v)
                                                 : Diverging(v / span);
      }
      const double luma = 0.299 * fill.r + 0.587 * fill.g + 0.114 * fill.b;
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" fill=\"" << Hex(fill)
          << "\" stroke=\"white\"/>\n";
      out << "<text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 4
          << "\" text-anchor=\"middle\" font-size=\"11\" fill=\""
          << (luma > 140 ? "black" : "white") << "\">" << Short(v, "%.3f")
          << "</text>\n";
    }
  }
  const int axis_y = kTop + kCell * static_cast<int>(rows.size());
  for (size_t j = 0; j < sigmas.size(); ++j) {
    const int x = kLeft + kCell * static_cast<int>(j) + kCell / 2;
    out << "<text x=\"" << x << "\" y=\"" << axis_y + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">"
        << Short(sigmas[j], "%.2g") << "</text>\n";
  }
  out << "<text x=\"" << kLeft + kCell * static_cast<int>(sigmas.size()) / 2
      << "\" y=\"" << axis_y + 40
      << "\" text-anchor=\"middle\" font-size=\"12\">sigma</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace riskdensity::cli
