#include "lmg/io/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "lmg/errors.hpp"

namespace lmg::io {

namespace {

constexpr double kLeft = 90.0, kRight = 230.0, kTop = 50.0, kBottom = 70.0;
constexpr std::array<const char*, 8> kPalette{"#1f5fa8", "#c8312b", "#2e8b3a", "#e08a00",
                                              "#7a3fa0", "#008b8b", "#8b5a2b", "#555555"};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string px(double v) { return fmt("%.2f", v); }

std::string escape(const std::string& s) {
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

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>) return "null";
        else if constexpr (std::is_same_v<V, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<V, double>) return format_number(v);
        else return v;
      },
      c);
}

double nice_step(double raw) {
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  const double nice = f <= 1.0 ? 1.0 : f <= 2.0 ? 2.0 : f <= 2.5 ? 2.5 : f <= 5.0 ? 5.0 : 10.0;
  return nice * mag;
}

std::string marker_svg(Marker m, double cx, double cy, const char* color, bool filled) {
  const std::string fill = filled ? color : "white";
  const std::string style = " fill=\"" + fill + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>";
  const double r = 4.0;
  switch (m) {
    case Marker::Circle:
      return "<circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) + "\" r=\"" + px(r) + "\"" + style;
    case Marker::Square:
      return "<rect x=\"" + px(cx - r) + "\" y=\"" + px(cy - r) + "\" width=\"" + px(2 * r) +
             "\" height=\"" + px(2 * r) + "\"" + style;
    case Marker::Diamond:
      return "<polygon points=\"" + px(cx) + "," + px(cy - r - 1) + " " + px(cx + r + 1) + "," +
             px(cy) + " " + px(cx) + "," + px(cy + r + 1) + " " + px(cx - r - 1) + "," + px(cy) +
             "\"" + style;
    case Marker::Triangle:
      return "<polygon points=\"" + px(cx) + "," + px(cy - r - 1) + " " + px(cx + r + 1) + "," +
             px(cy + r) + " " + px(cx - r - 1) + "," + px(cy + r) + "\"" + style;
  }
  return {};
}

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int target) {
  if (!(hi > lo)) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  }
  const double step = nice_step((hi - lo) / std::max(1, target - 1));
  const double first = std::floor(lo / step) * step;
  std::vector<double> ticks;
  for (int i = 0;; ++i) {
    double t = first + i * step;
    if (std::abs(t) < step * 1e-9) t = 0.0;
    ticks.push_back(t);
    if (t >= hi - step * 1e-9) break;
  }
  return ticks;
}

std::string render_svg(const Chart& chart, const Meta& meta) {
  if (chart.series.empty()) throw EmptySeries("chart has no series");
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const Series& s : chart.series) {
    if (s.x.empty()) throw EmptySeries("series '" + s.label + "' has no points");
    if (s.x.size() != s.y.size())
      throw DimensionError("series '" + s.label + "' has mismatched x and y lengths");
    if (!s.filled.empty() && s.filled.size() != s.x.size())
      throw DimensionError("series '" + s.label + "' has a fill flag count mismatch");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
        throw NonFiniteValue("series '" + s.label + "' has a non-finite point at index " +
                             std::to_string(i));
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  const std::vector<double> xt = nice_ticks(xmin, xmax);
  const std::vector<double> yt = nice_ticks(ymin, ymax);
  const double x0 = xt.front(), x1 = xt.back(), y0 = yt.front(), y1 = yt.back();
  const double pw = kCanvasWidth - kLeft - kRight, ph = kCanvasHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kTop + ph - (y - y0) / (y1 - y0) * ph; };

  std::string o;
  o += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"600\" viewBox=\"0 0 960 600\">\n";
  o += "<title>" + escape(chart.axes.title) + "</title>\n";
  o += "<desc>";
  for (std::size_t i = 0; i < meta.size(); ++i)
    o += (i ? "; " : "") + escape(meta[i].first) + "=" + escape(cell_text(meta[i].second));
  o += "</desc>\n<metadata>\n";
  for (const auto& [k, v] : meta) o += escape(k) + " = " + escape(cell_text(v)) + "\n";
  o += "</metadata>\n";
  o += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"white\"/>\n";
  o += "<text x=\"" + px(kLeft + pw / 2) + "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
       escape(chart.axes.title) + "</text>\n";

  o += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (double t : xt) o += "<line x1=\"" + px(sx(t)) + "\" y1=\"" + px(kTop) + "\" x2=\"" + px(sx(t)) + "\" y2=\"" + px(kTop + ph) + "\"/>\n";
  for (double t : yt) o += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(sy(t)) + "\" x2=\"" + px(kLeft + pw) + "\" y2=\"" + px(sy(t)) + "\"/>\n";
  o += "</g>\n";
  o += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" + px(pw) + "\" height=\"" + px(ph) +
       "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  o += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (double t : xt)
    o += "<text x=\"" + px(sx(t)) + "\" y=\"" + px(kTop + ph + 18) + "\" text-anchor=\"middle\">" + fmt("%g", t) + "</text>\n";
  for (double t : yt)
    o += "<text x=\"" + px(kLeft - 6) + "\" y=\"" + px(sy(t) + 4) + "\" text-anchor=\"end\">" + fmt("%g", t) + "</text>\n";
  o += "<text x=\"" + px(kLeft + pw / 2) + "\" y=\"" + px(kCanvasHeight - 20) + "\" text-anchor=\"middle\" font-size=\"14\">" +
       escape(chart.axes.x_label) + "</text>\n";
  o += "<text x=\"20\" y=\"" + px(kTop + ph / 2) + "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 " +
       px(kTop + ph / 2) + ")\">" + escape(chart.axes.y_label) + "</text>\n";
  o += "</g>\n";

  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const Series& s = chart.series[k];
    const char* color = kPalette[k % kPalette.size()];
    o += "<g>\n";
    if (s.connect) {
      o += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) o += (i ? " " : "") + px(sx(s.x[i])) + "," + px(sy(s.y[i]));
      o += "\"/>\n";
    }
    for (std::size_t i = 0; i < s.x.size(); ++i)
      o += marker_svg(s.marker, sx(s.x[i]), sy(s.y[i]), color, s.filled.empty() || s.filled[i]) + "\n";
    o += "</g>\n";
  }

  o += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  const double lx = kLeft + pw + 20;
  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const double ly = kTop + 10 + 22.0 * k;
    const char* color = kPalette[k % kPalette.size()];
    o += "<line x1=\"" + px(lx) + "\" y1=\"" + px(ly) + "\" x2=\"" + px(lx + 24) + "\" y2=\"" + px(ly) +
         "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    o += marker_svg(chart.series[k].marker, lx + 12, ly, color, true) + "\n";
    o += "<text x=\"" + px(lx + 32) + "\" y=\"" + px(ly + 4) + "\">" + escape(chart.series[k].label) + "</text>\n";
  }
  o += "</g>\n</svg>\n";
  return o;
}

void emit_svg_chart(const Chart& chart, const Meta& meta, const std::string& path) {
  write_file(path, render_svg(chart, meta));
}

}  // namespace lmg::io
