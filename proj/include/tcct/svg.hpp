// Deterministic SVG emission: a two-series line chart and a heatmap with a
// color legend. Output bytes depend only on the inputs.
#pragma once

#include <string>
#include <vector>

namespace tcct {

struct LineSeries {
  std::string label;
  std::string color;  // e.g. "#1b6ca8"
  std::vector<double> y;
};

struct LineChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<LineSeries> series;  // each y must match x in length
  double y_min = 0.0;
  double y_max = 1.0;
};

std::string svg_line_chart(const LineChartSpec& spec);

struct HeatmapSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x_coords;          // column centers
  std::vector<double> y_coords;          // row centers
  std::vector<double> values;            // row-major [iy * x_coords.size() + ix]
  double v_min = 0.0;
  double v_max = 1.0;
};

std::string svg_heatmap(const HeatmapSpec& spec);

}  // namespace tcct
