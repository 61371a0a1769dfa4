#include "polarmaps/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "polarmaps/errors.hpp"
#include "polarmaps/polar.hpp"

namespace polarmaps {

namespace {

std::function<double(double, double)> chart_field(const Poly& f,
                                                  const std::array<std::size_t, 2>& axes) {
  struct T {
    double c;
    unsigned ex, ey;
  };
  std::vector<T> terms;
  for (const auto& t : f.terms())
    terms.push_back({t.coeff.get_d(), t.exponent[axes[0]], t.exponent[axes[1]]});
  return [terms](double x, double y) {
    double s = 0;
    for (const auto& t : terms) s += t.c * std::pow(x, t.ex) * std::pow(y, t.ey);
    return s;
  };
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

}  // namespace

std::vector<Segment> marching_squares(const std::function<double(double, double)>& field,
                                      const PlotWindow& w, unsigned resolution) {
  if (resolution < 1) throw RangeError("plot resolution must be >= 1");
  const unsigned n = resolution;
  const double dx = (w.xmax - w.xmin) / n, dy = (w.ymax - w.ymin) / n;
  std::vector<double> v((n + 1) * (n + 1));
  auto at = [&](unsigned i, unsigned j) -> double& { return v[j * (n + 1) + i]; };
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned i = 0; i <= n; ++i) at(i, j) = field(w.xmin + i * dx, w.ymin + j * dy);

  std::vector<Segment> out;
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) {
      const double x = w.xmin + i * dx, y = w.ymin + j * dy;
      // Corners counter-clockwise from bottom-left.
      const double c[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      const double px[4] = {x, x + dx, x + dx, x};
      const double py[4] = {y, y, y + dy, y + dy};
      auto edge_point = [&](int e) {
        int a = e, b = (e + 1) % 4;
        double t = c[a] / (c[a] - c[b]);
        return std::array<double, 2>{px[a] + t * (px[b] - px[a]), py[a] + t * (py[b] - py[a])};
      };
      std::vector<int> crossings;
      for (int e = 0; e < 4; ++e)
        if ((c[e] >= 0) != (c[(e + 1) % 4] >= 0)) crossings.push_back(e);
      auto emit = [&](int e1, int e2) {
        auto p = edge_point(e1), q = edge_point(e2);
        out.push_back({p[0], p[1], q[0], q[1]});
      };
      if (crossings.size() == 2) {
        emit(crossings[0], crossings[1]);
      } else if (crossings.size() == 4) {
        // Saddle: the centre value decides which corners are connected.
        double centre = (c[0] + c[1] + c[2] + c[3]) / 4;
        if ((centre >= 0) == (c[0] >= 0)) {
          emit(0, 1);
          emit(2, 3);
        } else {
          emit(3, 0);
          emit(1, 2);
        }
      }
    }
  }
  return out;
}

PlotData emit_plot(const Poly& f, const std::vector<ProjPoint>& points, unsigned resolution,
                   std::size_t chart, std::optional<PlotWindow> window) {
  if (f.num_vars() != 3) throw DimensionError("plots are for plane curves (3 variables)");
  if (chart > 2) throw RangeError("chart index must be 0, 1 or 2");
  std::array<std::size_t, 2> axes{};
  for (std::size_t i = 0, k = 0; i < 3; ++i)
    if (i != chart) axes[k++] = i;

  PlotData plot{{}, chart, axes, resolution, {}, {}};
  std::vector<Poly> conics;
  for (const auto& p : points) {
    if (p.size() != 3) throw DimensionError("plot point needs 3 coordinates");
    if (f.evaluate(p) != 0) throw PreconditionError("point " + to_string(p) + " is not on the curve");
    if (p[chart] == 0) throw PreconditionError("point " + to_string(p) + " is not in the chart");
    conics.push_back(polar_cycle(f, 2, p).form);
    plot.marks.push_back({BigRat(p[axes[0]] / p[chart]).get_d(), BigRat(p[axes[1]] / p[chart]).get_d()});
  }

  auto curve = chart_field(f, axes);
  if (window) {
    plot.window = *window;
  } else {
    PlotWindow w{-3, 3, -3, 3};
    for (const auto& m : plot.marks) {
      w.xmin = std::min(w.xmin, m[0] - 1);
      w.xmax = std::max(w.xmax, m[0] + 1);
      w.ymin = std::min(w.ymin, m[1] - 1);
      w.ymax = std::max(w.ymax, m[1] + 1);
    }
    auto probe = marching_squares(curve, w, std::max(resolution, 16u));
    if (!probe.empty()) {
      PlotWindow fit{probe[0].x0, probe[0].x0, probe[0].y0, probe[0].y0};
      auto grow = [&](double x, double y) {
        fit.xmin = std::min(fit.xmin, x);
        fit.xmax = std::max(fit.xmax, x);
        fit.ymin = std::min(fit.ymin, y);
        fit.ymax = std::max(fit.ymax, y);
      };
      for (const auto& s : probe) {
        grow(s.x0, s.y0);
        grow(s.x1, s.y1);
      }
      for (const auto& m : plot.marks) grow(m[0], m[1]);
      w = fit;
    }
    double mx = std::max(w.xmax - w.xmin, 1e-3) * 0.1, my = std::max(w.ymax - w.ymin, 1e-3) * 0.1;
    plot.window = {w.xmin - mx, w.xmax + mx, w.ymin - my, w.ymax + my};
  }

  plot.objects.push_back({0, to_string(f), marching_squares(curve, plot.window, resolution)});
  for (std::size_t i = 0; i < conics.size(); ++i) {
    plot.objects.push_back({static_cast<int>(i + 1), to_string(conics[i]),
                            marching_squares(chart_field(conics[i], axes), plot.window,
                                             resolution)});
  }
  return plot;
}

std::string to_csv(const PlotData& plot) {
  std::ostringstream os;
  os << "object_id,x,y,segment_id\n";
  for (const auto& obj : plot.objects) {
    std::size_t id = 0;
    for (const auto& s : obj.segments) {
      os << obj.object_id << ',' << fmt(s.x0) << ',' << fmt(s.y0) << ',' << id << '\n';
      os << obj.object_id << ',' << fmt(s.x1) << ',' << fmt(s.y1) << ',' << id << '\n';
      ++id;
    }
  }
  return os.str();
}

std::string to_svg(const PlotData& plot) {
  const auto& w = plot.window;
  const double width = 600;
  const double height = std::clamp(width * (w.ymax - w.ymin) / (w.xmax - w.xmin), 100.0, 1200.0);
  auto sx = [&](double x) { return (x - w.xmin) / (w.xmax - w.xmin) * width; };
  auto sy = [&](double y) { return height - (y - w.ymin) / (w.ymax - w.ymin) * height; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
     << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height)
     << "\">\n"
     << "<!-- chart x" << plot.chart << "=1, axes x" << plot.axes[0] << " (right), x"
     << plot.axes[1] << " (up); window [" << fmt(w.xmin) << ", " << fmt(w.xmax) << "] x ["
     << fmt(w.ymin) << ", " << fmt(w.ymax) << "]; contours approximated on a " << plot.resolution
     << "x" << plot.resolution << " grid -->\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& obj : plot.objects) {
    const char* colour = obj.object_id == 0 ? "#d62728" : "#000000";
    const char* stroke = obj.object_id == 0 ? "2" : "1";
    os << "<g id=\"object" << obj.object_id << "\" stroke=\"" << colour << "\" stroke-width=\""
       << stroke << "\" fill=\"none\">\n<title>" << obj.label << "</title>\n";
    for (const auto& s : obj.segments) {
      os << "<line x1=\"" << fmt(sx(s.x0)) << "\" y1=\"" << fmt(sy(s.y0)) << "\" x2=\""
         << fmt(sx(s.x1)) << "\" y2=\"" << fmt(sy(s.y1)) << "\"/>\n";
    }
    os << "</g>\n";
  }
  for (const auto& m : plot.marks) {
    os << "<circle cx=\"" << fmt(sx(m[0])) << "\" cy=\"" << fmt(sy(m[1]))
       << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace polarmaps
