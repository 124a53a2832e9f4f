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

#ifndef CTX_PLOT_HPP
#define CTX_PLOT_HPP

#include <string>
#include <vector>

namespace ctx {

struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> yerr;  // optional, empty or same size as y
  std::string label;
  std::string color = "#1f6fb2";
  bool line = true;
  bool markers = true;
};

/// Horizontal reference line (e.g. a classical bound).
struct PlotHLine {
  double y;
  std::string label;
  std::string color = "#888888";
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  std::vector<PlotHLine> hlines;
  bool log_x = false;
};

/// Static SVG renderer; output depends only on the PlotSpec, so replotting
/// from the same CSV data is byte-stable.
void write_svg_plot(const std::string& path, const PlotSpec& spec);

}  // namespace ctx

#endif  // CTX_PLOT_HPP
