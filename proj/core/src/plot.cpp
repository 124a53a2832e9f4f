// Copyright 2026 The contextuality-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctx/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ctx {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kMarginL = 70.0;
constexpr double kMarginR = 30.0;
constexpr double kMarginT = 46.0;
constexpr double kMarginB = 56.0;

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

struct Range {
  double lo;
  double hi;
  double span() const { return hi - lo; }
};

Range padded(double lo, double hi) {
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  double pad = (hi - lo) * 0.08;
  return {lo - pad, hi + pad};
}

}  // namespace

void write_svg_plot(const std::string& path, const PlotSpec& spec) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const PlotSeries& s : spec.series) {
    if (s.x.size() != s.y.size()) {
      throw std::invalid_argument("series x/y length mismatch");
    }
    for (size_t i = 0; i < s.x.size(); ++i) {
      double x = spec.log_x ? std::log10(s.x[i]) : s.x[i];
      double e = i < s.yerr.size() ? s.yerr[i] : 0.0;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, s.y[i] - e);
      ymax = std::max(ymax, s.y[i] + e);
    }
  }
  for (const PlotHLine& h : spec.hlines) {
    ymin = std::min(ymin, h.y);
    ymax = std::max(ymax, h.y);
  }
  if (xmin > xmax) {
    xmin = 0.0;
    xmax = 1.0;
  }
  if (ymin > ymax) {
    ymin = 0.0;
    ymax = 1.0;
  }
  Range xr = padded(xmin, xmax);
  Range yr = padded(ymin, ymax);

  auto px = [&](double x) {
    double v = spec.log_x ? std::log10(x) : x;
    return kMarginL + (v - xr.lo) / xr.span() * (kWidth - kMarginL - kMarginR);
  };
  auto py = [&](double y) {
    return kHeight - kMarginB -
           (y - yr.lo) / yr.span() * (kHeight - kMarginT - kMarginB);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << spec.title
      << "</text>\n";

  // Axes with 5 ticks per direction.
  svg << "<g stroke=\"#333\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << kMarginL << "\" y1=\"" << kHeight - kMarginB
      << "\" x2=\"" << kWidth - kMarginR << "\" y2=\"" << kHeight - kMarginB
      << "\"/>\n";
  svg << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT << "\" x2=\""
      << kMarginL << "\" y2=\"" << kHeight - kMarginB << "\"/>\n";
  svg << "</g>\n";
  for (int t = 0; t <= 4; ++t) {
    double fx = xr.lo + xr.span() * t / 4.0;
    double fy = yr.lo + yr.span() * t / 4.0;
    double tx = kMarginL + (kWidth - kMarginL - kMarginR) * t / 4.0;
    double ty = kHeight - kMarginB -
                (kHeight - kMarginT - kMarginB) * t / 4.0;
    double x_value = spec.log_x ? std::pow(10.0, fx) : fx;
    svg << "<line x1=\"" << tx << "\" y1=\"" << kHeight - kMarginB
        << "\" x2=\"" << tx << "\" y2=\"" << kHeight - kMarginB + 5
        << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << tx << "\" y=\"" << kHeight - kMarginB + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << num(x_value) << "</text>\n";
    svg << "<line x1=\"" << kMarginL - 5 << "\" y1=\"" << ty << "\" x2=\""
        << kMarginL << "\" y2=\"" << ty << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << kMarginL - 9 << "\" y=\"" << ty + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << num(fy) << "</text>\n";
  }
  svg << "<text x=\"" << (kMarginL + kWidth - kMarginR) / 2 << "\" y=\""
      << kHeight - 14
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"13\">" << spec.x_label << "</text>\n";
  svg << "<text x=\"18\" y=\"" << (kMarginT + kHeight - kMarginB) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"13\" transform=\"rotate(-90 18 "
      << (kMarginT + kHeight - kMarginB) / 2 << ")\">" << spec.y_label
      << "</text>\n";

  for (const PlotHLine& h : spec.hlines) {
    double y = py(h.y);
    svg << "<line x1=\"" << kMarginL << "\" y1=\"" << y << "\" x2=\""
        << kWidth - kMarginR << "\" y2=\"" << y << "\" stroke=\"" << h.color
        << "\" stroke-dasharray=\"6 4\"/>\n";
    svg << "<text x=\"" << kWidth - kMarginR - 4 << "\" y=\"" << y - 5
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"11\" fill=\"" << h.color << "\">" << h.label
        << "</text>\n";
  }

  double legend_y = kMarginT + 6.0;
  for (const PlotSeries& s : spec.series) {
    if (s.line && s.x.size() > 1) {
      svg << "<polyline fill=\"none\" stroke=\"" << s.color
          << "\" stroke-width=\"1.5\" points=\"";
      for (size_t i = 0; i < s.x.size(); ++i) {
        svg << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
      }
      svg << "\"/>\n";
    }
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (i < s.yerr.size() && s.yerr[i] > 0.0) {
        svg << "<line x1=\"" << px(s.x[i]) << "\" y1=\""
            << py(s.y[i] - s.yerr[i]) << "\" x2=\"" << px(s.x[i])
            << "\" y2=\"" << py(s.y[i] + s.yerr[i]) << "\" stroke=\""
            << s.color << "\"/>\n";
      }
      if (s.markers) {
        svg << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i])
            << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
      }
    }
    if (!s.label.empty()) {
      svg << "<circle cx=\"" << kMarginL + 10 << "\" cy=\"" << legend_y
          << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
      svg << "<text x=\"" << kMarginL + 18 << "\" y=\"" << legend_y + 4
          << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label
          << "</text>\n";
      legend_y += 16.0;
    }
  }
  svg << "</svg>\n";

  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << svg.str();
}

}  // namespace ctx
