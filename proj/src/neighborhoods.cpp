#include "longtree/neighborhoods.hpp"

#include <set>
#include <string>

#include "longtree/error.hpp"

namespace longtree {

NeighborhoodSet::NeighborhoodSet(std::vector<Neighborhood> neighborhoods)
    : neighborhoods_(std::move(neighborhoods)) {
  if (neighborhoods_.size() < 2) throw InputError("need at least two neighborhoods");
  std::set<ColorId> seen;
  offsets_.push_back(0);
  for (std::size_t i = 0; i < neighborhoods_.size(); ++i) {
    const Neighborhood& nb = neighborhoods_[i];
    if (!seen.insert(nb.color).second) throw InputError("duplicate color");
    if (nb.polygons.empty()) throw InputError("neighborhood without polygons");
    for (const Polygon& poly : nb.polygons) {
      if (poly.empty()) throw InputError("empty polygon");
      for (const Point p : poly) {
        if (!is_finite(p)) throw InputError("non-finite coordinate");
        points_.push_back(p);
        colors_.push_back(nb.color);
        owners_.push_back(i);
      }
    }
    offsets_.push_back(points_.size());
  }
}

std::size_t NeighborhoodSet::find_color(ColorId color) const {
  for (std::size_t i = 0; i < neighborhoods_.size(); ++i) {
    if (neighborhoods_[i].color == color) return i;
  }
  return neighborhoods_.size();
}

std::size_t farthest_vertex_in(const NeighborhoodSet& nbs, std::size_t nb, Point from) {
  if (nb >= nbs.size() || nbs.count(nb) == 0) throw std::invalid_argument("empty neighborhood");
  std::size_t best = nbs.begin(nb);
  double best_d2 = dist2(nbs.point(best), from);
  for (std::size_t k = best + 1; k < nbs.end(nb); ++k) {
    const double d2 = dist2(nbs.point(k), from);
    if (d2 > best_d2) {
      best = k;
      best_d2 = d2;
    }
  }
  return best;
}

}  // namespace longtree
