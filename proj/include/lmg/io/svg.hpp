#pragma once

#include <string>
#include <vector>

#include "lmg/io/table.hpp"

namespace lmg::io {

enum class Marker { Circle, Square, Diamond, Triangle };

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  Marker marker = Marker::Circle;
  /// Per-point marker fill; empty means every marker is filled.
  std::vector<bool> filled;
  bool connect = true;
};

struct Axes {
  std::string title;
  std::string x_label;
  std::string y_label;
};

struct Chart {
  Axes axes;
  std::vector<Series> series;
};

inline constexpr int kCanvasWidth = 960;
inline constexpr int kCanvasHeight = 600;

/// Round tick positions covering [lo, hi], roughly `target` of them.
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

/// Standalone SVG document. The meta pairs go into <metadata>.
/// Throws EmptySeries when there is no series or a series has no points,
/// DimensionError on x/y length mismatch, NonFiniteValue on NaN/inf.
std::string render_svg(const Chart& chart, const Meta& meta);
void emit_svg_chart(const Chart& chart, const Meta& meta, const std::string& path);

}  // namespace lmg::io
