#pragma once

// Planar primitives shared by every solver: metric helpers, an exact
// orientation predicate, the segment-crossing rule used for noncrossing
// validation, diametral pairs and the canonical (a, b) frame.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace longtree {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

struct Segment {
  Point a;
  Point b;

  [[nodiscard]] bool degenerate() const { return a == b; }
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Relative tolerance used for every metric threshold comparison.
inline constexpr double kMetricTolerance = 1e-12;

/// a <= b up to kMetricTolerance relative to the larger magnitude.
[[nodiscard]] bool approx_leq(double a, double b);

[[nodiscard]] bool is_finite(Point p);

[[nodiscard]] double dist(Point p, Point q);
[[nodiscard]] double dist2(Point p, Point q);

enum class Orientation { right = -1, collinear = 0, left = 1 };

/// Sign of the signed area of triangle (p, q, r). A floating-point filter
/// settles the easy cases; the rest are decided by exact expansion
/// arithmetic, so the sign is never wrong for finite inputs.
[[nodiscard]] Orientation orientation(Point p, Point q, Point r);

/// True iff the segments meet at a point interior to at least one of them.
/// Touching at a shared endpoint is not a crossing; a collinear overlap of
/// positive length is. Throws std::invalid_argument("degenerate segment").
[[nodiscard]] bool segments_cross(const Segment& s1, const Segment& s2);

/// Farthest pair (i < j), ties broken by the lexicographically smallest pair.
/// OpenMP-parallel scan over the first index; diametral_pair_serial is the
/// reference kept for tests. Throws on fewer than two points.
[[nodiscard]] IndexPair diametral_pair(std::span<const Point> points);
[[nodiscard]] IndexPair diametral_pair_serial(std::span<const Point> points);

/// Farthest pair whose colors differ; same tie-break as diametral_pair.
[[nodiscard]] IndexPair bichromatic_diametral_pair(std::span<const Point> points,
                                                   std::span<const long long> colors);
[[nodiscard]] IndexPair bichromatic_diametral_pair_serial(std::span<const Point> points,
                                                          std::span<const long long> colors);

/// Similarity transform p -> scale * R(rotation) * (p + translation).
struct Frame {
  Point translation;
  double rotation = 0.0;
  double scale = 1.0;

  [[nodiscard]] Point apply(Point p) const;
  [[nodiscard]] Point invert(Point p) const;
  [[nodiscard]] std::vector<Point> apply(std::span<const Point> points) const;
};

enum class TargetLength { unit, preserve };

struct FramedPoints {
  Frame frame;
  std::vector<Point> points;
};

/// Moves points[i] to the origin and points[j] onto the positive x-axis, at
/// distance 1 (unit) or |ij| (preserve). The images of i and j are exact.
[[nodiscard]] FramedPoints canonical_frame(std::span<const Point> points, std::size_t i,
                                           std::size_t j, TargetLength target);

[[nodiscard]] bool in_disk(Point p, Point center, double radius);

/// |p f1| + |p f2| <= sum. Throws std::invalid_argument("empty ellipse") when
/// sum is below the focal distance.
[[nodiscard]] bool in_ellipse(Point p, Point f1, Point f2, double sum);

/// Intersections of two circles, sorted by y descending (then x ascending).
/// Empty for disjoint, nested or concentric circles; one point when tangent.
[[nodiscard]] std::vector<Point> circle_circle_intersections(Point c1, double r1, Point c2,
                                                             double r2);

}  // namespace longtree
