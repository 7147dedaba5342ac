#include "longtree/trees.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace longtree {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t u, std::size_t v) {
    u = find(u);
    v = find(v);
    if (u == v) return false;
    parent_[std::max(u, v)] = std::min(u, v);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

enum class Goal { minimize, maximize };

// Dense Prim over squared distances, so equal lengths compare exactly. The
// next vertex is the best key with the smallest index; keys only move on a
// strict improvement.
Tree prim(std::span<const Point> pts, Goal goal, std::vector<std::size_t> seeds,
          std::vector<Edge> seed_edges) {
  const std::size_t n = pts.size();
  Tree t(n, std::move(seed_edges));
  if (n == 0) throw std::invalid_argument("empty point set");
  std::vector<bool> in_tree(n, false);
  std::vector<double> key(n, goal == Goal::minimize ? INFINITY : -INFINITY);
  std::vector<std::size_t> parent(n, 0);
  const auto better = [goal](double a, double b) { return goal == Goal::minimize ? a < b : a > b; };
  const auto absorb = [&](std::size_t u) {
    in_tree[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double w = dist2(pts[u], pts[v]);
      if (better(w, key[v])) {
        key[v] = w;
        parent[v] = u;
      }
    }
  };
  for (const std::size_t s : seeds) absorb(s);
  for (std::size_t step = seeds.size(); step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (pick == n || better(key[v], key[pick])) pick = v;
    }
    t.add_edge(parent[pick], pick);
    absorb(pick);
  }
  return t;
}

}  // namespace

std::vector<Edge> Tree::sorted_edges() const {
  std::vector<Edge> out = edges;
  std::sort(out.begin(), out.end());
  return out;
}

double tree_length(const Tree& t, std::span<const Point> pts) {
  double total = 0.0;
  for (const Edge& e : t.edges) {
    if (e.i >= pts.size() || e.j >= pts.size()) throw std::out_of_range("edge out of range");
    total += dist(pts[e.i], pts[e.j]);
  }
  return total;
}

std::optional<std::string> validate_spanning_tree(const Tree& t, std::span<const Point> pts) {
  if (t.n != pts.size()) return "vertex count does not match point count";
  for (const Edge& e : t.edges) {
    if (e.j >= t.n) return "edge out of range";
    if (e.i == e.j) return "self-loop";
  }
  const auto sorted = t.sorted_edges();
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "duplicate edge";
  DisjointSets sets(t.n);
  for (const Edge& e : t.edges) {
    if (!sets.unite(e.i, e.j)) return "cycle";
  }
  if (t.n > 0 && t.edges.size() != t.n - 1) return "not spanning";
  return std::nullopt;
}

CrossingCheck is_noncrossing(const Tree& t, std::span<const Point> pts) {
  std::vector<Segment> segs;
  segs.reserve(t.edges.size());
  for (const Edge& e : t.edges) segs.push_back({pts[e.i], pts[e.j]});
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (segs[k].degenerate()) return {false, std::pair{t.edges[k], t.edges[k]}};
  }
  for (std::size_t k = 0; k < segs.size(); ++k) {
    for (std::size_t l = k + 1; l < segs.size(); ++l) {
      if (segments_cross(segs[k], segs[l])) return {false, std::pair{t.edges[k], t.edges[l]}};
    }
  }
  return {};
}

Tree min_spanning_tree(std::span<const Point> pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  return prim(pts, Goal::minimize, {0}, {});
}

Tree max_spanning_tree(std::span<const Point> pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  return prim(pts, Goal::maximize, {0}, {});
}

Tree max_spanning_tree_with_edge(std::span<const Point> pts, std::size_t u, std::size_t v) {
  if (u >= pts.size() || v >= pts.size() || u == v) throw std::invalid_argument("bad forced edge");
  return prim(pts, Goal::maximize, {u, v}, {Edge(u, v)});
}

Tree star(std::span<const Point> pts, std::size_t center) {
  if (center >= pts.size()) throw std::out_of_range("star center");
  Tree t(pts.size());
  for (std::size_t v = 0; v < pts.size(); ++v) {
    if (v != center) t.add_edge(center, v);
  }
  return t;
}

double star_length(std::span<const Point> pts, std::size_t center) {
  double total = 0.0;
  for (const Point p : pts) total += dist(pts[center], p);
  return total;
}

BestStar best_star(std::span<const Point> pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  std::size_t best = 0;
  double best_len = star_length(pts, 0);
  for (std::size_t c = 1; c < pts.size(); ++c) {
    const double len = star_length(pts, c);
    if (len > best_len) {
      best = c;
      best_len = len;
    }
  }
  return {star(pts, best), best, best_len};
}

namespace {

Point rotate(Point v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

double cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }

// Apex of the equilateral triangle erected on pq away from r.
Point outer_apex(Point p, Point q, Point r) {
  const Point up = p + rotate(q - p, std::numbers::pi / 3.0);
  const Point down = p + rotate(q - p, -std::numbers::pi / 3.0);
  const double side_r = cross(q - p, r - p);
  return cross(q - p, up - p) * side_r < 0.0 ? up : down;
}

Point torricelli_start(Point a, Point b, Point c) {
  const Point pa = outer_apex(b, c, a);
  const Point pb = outer_apex(c, a, b);
  const Point da = pa - a;
  const Point db = pb - b;
  const double denom = cross(da, db);
  if (denom == 0.0) return (1.0 / 3.0) * (a + b + c);
  const double t = cross(b - a, db) / denom;
  return a + t * da;
}

}  // namespace

Fermat3Result fermat_point(Point a, Point b, Point c) {
  const std::array<Point, 3> v = {a, b, c};
  // Coincident terminals: the answer is a segment.
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = k + 1; l < 3; ++l) {
      if (v[k] == v[l]) {
        const Point other = v[3 - k - l];
        return {v[k], dist(v[k], other), k};
      }
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const Point u = v[(k + 1) % 3] - v[k];
    const Point w = v[(k + 2) % 3] - v[k];
    const double lu = std::hypot(u.x, u.y);
    const double lw = std::hypot(w.x, w.y);
    const double cosine = (u.x * w.x + u.y * w.y) / (lu * lw);
    if (cosine <= -0.5) return {v[k], lu + lw, k};
  }

  // Weiszfeld refinement from the Simpson-line intersection.
  const double scale = std::max({dist(a, b), dist(b, c), dist(c, a)});
  Point x = torricelli_start(a, b, c);
  for (int iter = 0; iter < 200; ++iter) {
    double wsum = 0.0;
    Point acc{0.0, 0.0};
    bool stalled = false;
    for (const Point p : v) {
      const double d = dist(x, p);
      if (d <= 1e-15 * scale) {
        stalled = true;
        break;
      }
      wsum += 1.0 / d;
      acc = acc + (1.0 / d) * p;
    }
    if (stalled) {
      x = x + Point{1e-9 * scale, 1e-9 * scale};
      continue;
    }
    const Point next = (1.0 / wsum) * acc;
    const double step = dist(next, x);
    x = next;
    if (step <= 1e-12 * scale) break;
  }
  return {x, dist(x, a) + dist(x, b) + dist(x, c), std::nullopt};
}

}  // namespace longtree
