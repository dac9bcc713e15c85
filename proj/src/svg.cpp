// SVG chart emission.
#include "tcct/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tcct/csv.hpp"

namespace tcct {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 52.0;

std::string num(double v) {
  // Fixed short decimal keeps coordinates stable and files compact.
  const double r = std::round(v * 100.0) / 100.0;
  std::string s = format_double(r);
  return s.empty() ? "0" : s;
}

void append_text(std::string& out, double x, double y, const std::string& anchor,
                 const std::string& text, const char* extra = "") {
  out += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor +
         "\" font-family=\"sans-serif\" font-size=\"12\"" + extra + ">" + text + "</text>\n";
}

// Two-stop linear color ramp from pale yellow to deep red.
std::string ramp_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r0 = 255, g0 = 255, b0 = 204;
  const int r1 = 128, g1 = 0, b1 = 38;
  const int r = static_cast<int>(std::lround(r0 + t * (r1 - r0)));
  const int g = static_cast<int>(std::lround(g0 + t * (g1 - g0)));
  const int b = static_cast<int>(std::lround(b0 + t * (b1 - b0)));
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return std::string(buf);
}

}  // namespace

std::string svg_line_chart(const LineChartSpec& spec) {
  if (spec.x.empty()) throw std::invalid_argument("line chart needs at least one x value");
  for (const LineSeries& s : spec.series) {
    if (s.y.size() != spec.x.size()) {
      throw std::invalid_argument("series length must match x grid");
    }
  }
  const double x_lo = *std::min_element(spec.x.begin(), spec.x.end());
  const double x_hi = *std::max_element(spec.x.begin(), spec.x.end());
  const double x_span = x_hi > x_lo ? x_hi - x_lo : 1.0;
  const double y_span = spec.y_max > spec.y_min ? spec.y_max - spec.y_min : 1.0;
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double v) { return kMarginLeft + (v - x_lo) / x_span * plot_w; };
  auto py = [&](double v) { return kMarginTop + (spec.y_max - v) / y_span * plot_h; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
                    "\" height=\"" + num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  append_text(out, kWidth / 2, 22, "middle", spec.title, " font-size=\"15\"");

  // Axes with five ticks per side.
  out += "<g stroke=\"#444444\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kMarginTop) + "\" x2=\"" +
         num(kMarginLeft) + "\" y2=\"" + num(kHeight - kMarginBottom) + "\"/>\n";
  out += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kHeight - kMarginBottom) +
         "\" x2=\"" + num(kWidth - kMarginRight) + "\" y2=\"" + num(kHeight - kMarginBottom) +
         "\"/>\n";
  out += "</g>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = x_lo + x_span * i / 4.0;
    const double fy = spec.y_min + y_span * i / 4.0;
    const double gx = px(fx);
    const double gy = py(fy);
    out += "<line x1=\"" + num(gx) + "\" y1=\"" + num(kHeight - kMarginBottom) + "\" x2=\"" +
           num(gx) + "\" y2=\"" + num(kHeight - kMarginBottom + 5) +
           "\" stroke=\"#444444\"/>\n";
    append_text(out, gx, kHeight - kMarginBottom + 19, "middle", format_double(fx));
    out += "<line x1=\"" + num(kMarginLeft - 5) + "\" y1=\"" + num(gy) + "\" x2=\"" +
           num(kMarginLeft) + "\" y2=\"" + num(gy) + "\" stroke=\"#444444\"/>\n";
    append_text(out, kMarginLeft - 9, gy + 4, "end", format_double(fy));
  }
  append_text(out, kMarginLeft + plot_w / 2, kHeight - 12, "middle", spec.x_label);
  out += "<text x=\"16\" y=\"" + num(kMarginTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 " +
         num(kMarginTop + plot_h / 2) + ")\">" + spec.y_label + "</text>\n";

  for (const LineSeries& s : spec.series) {
    out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < spec.x.size(); ++i) {
      if (i) out += ' ';
      out += num(px(spec.x[i])) + "," + num(py(s.y[i]));
    }
    out += "\"/>\n";
  }

  // Legend in the upper-left corner of the plot area.
  double ly = kMarginTop + 14;
  for (const LineSeries& s : spec.series) {
    out += "<line x1=\"" + num(kMarginLeft + 10) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
           num(kMarginLeft + 34) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + s.color +
           "\" stroke-width=\"2\"/>\n";
    append_text(out, kMarginLeft + 40, ly, "start", s.label);
    ly += 16;
  }
  out += "</svg>\n";
  return out;
}

std::string svg_heatmap(const HeatmapSpec& spec) {
  const size_t nx = spec.x_coords.size();
  const size_t ny = spec.y_coords.size();
  if (nx == 0 || ny == 0) throw std::invalid_argument("heatmap needs a nonempty grid");
  if (spec.values.size() != nx * ny) throw std::invalid_argument("heatmap values size mismatch");
  const double v_span = spec.v_max > spec.v_min ? spec.v_max - spec.v_min : 1.0;
  const double legend_w = 56.0;
  const double plot_w = kWidth - kMarginLeft - kMarginRight - legend_w;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const double cell_w = plot_w / static_cast<double>(nx);
  const double cell_h = plot_h / static_cast<double>(ny);

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
                    "\" height=\"" + num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  append_text(out, kWidth / 2, 22, "middle", spec.title, " font-size=\"15\"");

  // Row 0 is drawn at the bottom so both axes increase away from the origin.
  for (size_t iy = 0; iy < ny; ++iy) {
    for (size_t ix = 0; ix < nx; ++ix) {
      const double v = spec.values[iy * nx + ix];
      const double gx = kMarginLeft + cell_w * static_cast<double>(ix);
      const double gy = kMarginTop + plot_h - cell_h * static_cast<double>(iy + 1);
      out += "<rect x=\"" + num(gx) + "\" y=\"" + num(gy) + "\" width=\"" + num(cell_w + 0.5) +
             "\" height=\"" + num(cell_h + 0.5) + "\" fill=\"" +
             ramp_color((v - spec.v_min) / v_span) + "\"/>\n";
    }
  }

  // Tick labels on first, middle, and last cells of each axis.
  for (size_t ix : {size_t{0}, nx / 2, nx - 1}) {
    const double gx = kMarginLeft + cell_w * (static_cast<double>(ix) + 0.5);
    append_text(out, gx, kHeight - kMarginBottom + 19, "middle", format_double(spec.x_coords[ix]));
  }
  for (size_t iy : {size_t{0}, ny / 2, ny - 1}) {
    const double gy = kMarginTop + plot_h - cell_h * (static_cast<double>(iy) + 0.5);
    append_text(out, kMarginLeft - 9, gy + 4, "end", format_double(spec.y_coords[iy]));
  }
  append_text(out, kMarginLeft + plot_w / 2, kHeight - 12, "middle", spec.x_label);
  out += "<text x=\"16\" y=\"" + num(kMarginTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 " +
         num(kMarginTop + plot_h / 2) + ")\">" + spec.y_label + "</text>\n";

  // Color legend: vertical ramp with min/max labels.
  const double lx = kWidth - kMarginRight - legend_w + 16;
  const int steps = 24;
  const double step_h = plot_h / steps;
  for (int i = 0; i < steps; ++i) {
    const double t = (static_cast<double>(steps - 1 - i)) / (steps - 1);
    out += "<rect x=\"" + num(lx) + "\" y=\"" + num(kMarginTop + step_h * i) + "\" width=\"14\" height=\"" +
           num(step_h + 0.5) + "\" fill=\"" + ramp_color(t) + "\"/>\n";
  }
  append_text(out, lx + 18, kMarginTop + 10, "start", format_double(spec.v_max));
  append_text(out, lx + 18, kMarginTop + plot_h, "start", format_double(spec.v_min));
  out += "</svg>\n";
  return out;
}

}  // namespace tcct
