#pragma once

#include <iosfwd>
#include <optional>
#include <span>

#include "longtree/geom.hpp"
#include "longtree/neighborhoods.hpp"
#include "longtree/trees.hpp"

namespace longtree {

enum class RegionFamily { none, stnb, ncst };

struct SvgOptions {
  const NeighborhoodSet* neighborhoods = nullptr;
  /// Overlay lens L, the ellipse(s) and sampled Q cells around the pair
  /// (a, b). region_unit is the frame unit: |ab| for stnb, the diameter for
  /// ncst.
  std::optional<std::pair<Point, Point>> region_pair;
  double region_unit = 1.0;
  RegionFamily regions = RegionFamily::none;
  double width = 640.0;
};

/// Static drawing of a tree over pts (tree vertex i at pts[i]).
void render_svg(std::ostream& out, std::span<const Point> pts, const Tree& t, const SvgOptions& opts = {});

}  // namespace longtree
