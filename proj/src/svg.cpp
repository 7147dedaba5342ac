#include "longtree/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>

#include "longtree/io.hpp"
#include "longtree/ncst.hpp"
#include "longtree/stnb.hpp"

namespace longtree {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct View {
  double min_x, max_y, scale, margin;

  [[nodiscard]] double px(double v) const { return margin + (v - min_x) * scale; }
  [[nodiscard]] double py(double v) const { return margin + (max_y - v) * scale; }
  [[nodiscard]] std::string x(double v) const { return format_double(px(v)); }
  [[nodiscard]] std::string y(double v) const { return format_double(py(v)); }
};

void circle_path(std::ostream& out, const View& v, Point c, double r, const char* stroke) {
  out << "<circle cx=\"" << v.x(c.x) << "\" cy=\"" << v.y(c.y) << "\" r=\"" << format_double(r * v.scale)
      << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-dasharray=\"4 3\"/>\n";
}

void ellipse_path(std::ostream& out, const View& v, const Frame& frame, Point f1, Point f2, double sum,
                  const char* stroke) {
  const Point mid{(f1.x + f2.x) / 2.0, (f1.y + f2.y) / 2.0};
  const double c = dist(f1, f2) / 2.0;
  const double a = sum / 2.0;
  const double b = std::sqrt(std::max(0.0, a * a - c * c));
  out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" points=\"";
  for (int k = 0; k <= 96; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 96.0;
    const Point p = frame.invert({mid.x + a * std::cos(t), mid.y + b * std::sin(t)});
    out << v.x(p.x) << ',' << v.y(p.y) << ' ';
  }
  out << "\"/>\n";
}

}  // namespace

void render_svg(std::ostream& out, std::span<const Point> pts, const Tree& t, const SvgOptions& opts) {
  std::vector<Point> all(pts.begin(), pts.end());
  if (opts.neighborhoods) {
    for (const Point p : opts.neighborhoods->points()) all.push_back(p);
  }
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  if (!all.empty()) {
    min_x = max_x = all[0].x;
    min_y = max_y = all[0].y;
    for (const Point p : all) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double margin = 24.0;
  const View v{min_x, max_y, (opts.width - 2.0 * margin) / span, margin};
  const double height = 2.0 * margin + (max_y - min_y) * v.scale;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(opts.width) << "\" height=\""
      << format_double(height) << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (opts.regions != RegionFamily::none && opts.region_pair) {
    const auto [a, b] = *opts.region_pair;
    const std::array<Point, 2> ends{a, b};
    const FramedPoints fp = canonical_frame(ends, 0, 1, TargetLength::preserve);
    const double ab = dist(a, b);
    const double unit = opts.region_unit;
    const Point fa{0.0, 0.0};
    const Point fb{ab, 0.0};
    if (opts.regions == RegionFamily::stnb) {
      const StnbParams p = stnb_params();
      circle_path(out, v, a, unit, "#888");
      circle_path(out, v, b, unit, "#888");
      ellipse_path(out, v, fp.frame, fa, fb, p.ellipse_sum * unit, "#2ca02c");
    } else {
      const NcstParams p = ncst_params(ab / unit);
      circle_path(out, v, a, unit, "#888");
      circle_path(out, v, b, unit, "#888");
      ellipse_path(out, v, fp.frame, fa, fb, p.lambda * unit, "#2ca02c");
      ellipse_path(out, v, fp.frame, fa, fb, p.gamma * unit, "#9467bd");
    }
    // Q sampled on a grid over the frame's bounding square.
    const int cells = 60;
    const double cell = 2.0 * unit / cells;
    const StnbParams sp = stnb_params();
    const std::optional<RegionClassifier> rc =
        opts.regions == RegionFamily::ncst ? std::optional<RegionClassifier>(RegionClassifier(ab / unit))
                                           : std::nullopt;
    out << "<g fill=\"#d62728\" fill-opacity=\"0.25\">\n";
    for (int gx = 0; gx < cells; ++gx) {
      for (int gy = 0; gy < cells; ++gy) {
        const Point q{ab / 2.0 - unit + (gx + 0.5) * cell, -unit + (gy + 0.5) * cell};
        const Point scaled{q.x / unit, q.y / unit};
        const bool in_q = rc ? rc->label(scaled).in_Q : classify_stnb_point(scaled, sp).in_Q;
        if (!in_q) continue;
        const Point w = fp.frame.invert(q);
        const double r = cell * v.scale * 0.5;
        out << "<rect x=\"" << format_double(v.px(w.x) - r) << "\" y=\""
            << format_double(v.py(w.y) - r) << "\" width=\"" << format_double(2 * r) << "\" height=\""
            << format_double(2 * r) << "\"/>\n";
      }
    }
    out << "</g>\n";
  }

  if (opts.neighborhoods) {
    const auto& nbs = opts.neighborhoods->neighborhoods();
    for (std::size_t i = 0; i < nbs.size(); ++i) {
      const char* color = kPalette[i % kPalette.size()];
      for (const Polygon& poly : nbs[i].polygons) {
        out << "<polygon fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"" << color << "\" points=\"";
        for (const Point p : poly) out << v.x(p.x) << ',' << v.y(p.y) << ' ';
        out << "\"/>\n";
      }
    }
  }

  out << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const Edge e : t.edges) {
    out << "<line x1=\"" << v.x(pts[e.i].x) << "\" y1=\"" << v.y(pts[e.i].y) << "\" x2=\"" << v.x(pts[e.j].x)
        << "\" y2=\"" << v.y(pts[e.j].y) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"black\">\n";
  for (const Point p : pts) out << "<circle cx=\"" << v.x(p.x) << "\" cy=\"" << v.y(p.y) << "\" r=\"3\"/>\n";
  out << "</g>\n</svg>\n";
}

}  // namespace longtree
