#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polarmaps/poly.hpp"

namespace polarmaps {

// Plotting is the only floating-point code in the library. Contours are
// approximations (sign changes on a grid, linear interpolation along cell
// edges); nothing here feeds back into exact computations.

struct Segment {
  double x0, y0, x1, y1;
};

struct PlotWindow {
  double xmin, xmax, ymin, ymax;
};

struct ContourSet {
  int object_id;  // 0: the curve, i >= 1: conic at the i-th base point
  std::string label;
  std::vector<Segment> segments;
};

struct PlotData {
  PlotWindow window;
  std::size_t chart;               // affine chart x_chart = 1
  std::array<std::size_t, 2> axes; // coordinates used as (x, y)
  unsigned resolution;
  std::vector<ContourSet> objects;
  std::vector<std::array<double, 2>> marks;  // base points
};

/// Zero set of `field` over the window on a resolution x resolution cell grid.
std::vector<Segment> marching_squares(const std::function<double(double, double)>& field,
                                      const PlotWindow& window, unsigned resolution);

/// Contours of V(F) and of the osculating conics g^2(xi) for each base point,
/// in the chart x_chart = 1. F must be a plane curve; every point must lie
/// on it (PreconditionError otherwise) and on the chart.
PlotData emit_plot(const Poly& f, const std::vector<ProjPoint>& points, unsigned resolution,
                   std::size_t chart = 2, std::optional<PlotWindow> window = std::nullopt);

/// Header: object_id,x,y,segment_id. Each segment contributes two rows.
std::string to_csv(const PlotData& plot);
/// Static SVG 1.1 drawing: curve in red, conics in black, base points marked.
std::string to_svg(const PlotData& plot);

}  // namespace polarmaps
