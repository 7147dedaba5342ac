#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "longtree/geom.hpp"

namespace longtree {

using ColorId = long long;
using Polygon = std::vector<Point>;

/// A colored union of polygons; single-vertex polygons model exact points.
struct Neighborhood {
  ColorId color = 0;
  std::vector<Polygon> polygons;
};

/// Neighborhoods flattened to their boundary vertices. Vertex k belongs to
/// neighborhood owner(k); the vertices of neighborhood i occupy the
/// contiguous range [begin(i), end(i)).
class NeighborhoodSet {
 public:
  /// Throws InputError on fewer than two neighborhoods, an empty polygon
  /// list or polygon, a non-finite vertex, or a duplicate color.
  explicit NeighborhoodSet(std::vector<Neighborhood> neighborhoods);

  [[nodiscard]] std::size_t size() const { return neighborhoods_.size(); }
  [[nodiscard]] std::size_t vertex_count() const { return points_.size(); }

  [[nodiscard]] const std::vector<Neighborhood>& neighborhoods() const { return neighborhoods_; }
  [[nodiscard]] const Neighborhood& neighborhood(std::size_t i) const { return neighborhoods_[i]; }

  [[nodiscard]] std::span<const Point> points() const { return points_; }
  [[nodiscard]] std::span<const ColorId> colors() const { return colors_; }
  [[nodiscard]] Point point(std::size_t k) const { return points_[k]; }
  [[nodiscard]] std::size_t owner(std::size_t k) const { return owners_[k]; }
  [[nodiscard]] std::size_t begin(std::size_t i) const { return offsets_[i]; }
  [[nodiscard]] std::size_t end(std::size_t i) const { return offsets_[i + 1]; }
  [[nodiscard]] std::size_t count(std::size_t i) const { return end(i) - begin(i); }

  /// Index of the neighborhood with this color, or size() if absent.
  [[nodiscard]] std::size_t find_color(ColorId color) const;

 private:
  std::vector<Neighborhood> neighborhoods_;
  std::vector<Point> points_;
  std::vector<ColorId> colors_;
  std::vector<std::size_t> owners_;
  std::vector<std::size_t> offsets_;
};

/// Flattened index of the vertex of neighborhood nb farthest from `from`;
/// ties go to the smallest index.
[[nodiscard]] std::size_t farthest_vertex_in(const NeighborhoodSet& nbs, std::size_t nb, Point from);

}  // namespace longtree
