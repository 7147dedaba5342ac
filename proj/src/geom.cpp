#include "longtree/geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace longtree {

namespace {

// Error-free transformations (Knuth two-sum, Dekker split product). The
// library is compiled with -ffp-contract=off so these stay exact.
struct TwoTerm {
  double hi;
  double lo;
};

TwoTerm two_sum(double a, double b) {
  const double x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  return {x, (a - av) + (b - bv)};
}

TwoTerm split(double a) {
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  const double c = kSplitter * a;
  const double big = c - a;
  const double hi = c - big;
  return {hi, a - hi};
}

TwoTerm two_product(double a, double b) {
  const double x = a * b;
  const auto [ahi, alo] = split(a);
  const auto [bhi, blo] = split(b);
  const double err = alo * blo - (((x - ahi * bhi) - alo * bhi) - ahi * blo);
  return {x, err};
}

// Nonoverlapping expansion, smallest magnitude first, zero components elided.
class Expansion {
 public:
  void grow(double b) {
    double q = b;
    std::size_t out = 0;
    for (std::size_t k = 0; k < size_; ++k) {
      const auto [sum, err] = two_sum(q, terms_[k]);
      q = sum;
      if (err != 0.0) terms_[out++] = err;
    }
    if (q != 0.0) terms_[out++] = q;
    size_ = out;
  }

  [[nodiscard]] int sign() const {
    if (size_ == 0) return 0;
    return terms_[size_ - 1] > 0.0 ? 1 : -1;
  }

 private:
  std::array<double, 16> terms_{};
  std::size_t size_ = 0;
};

int exact_orientation_sign(Point p, Point q, Point r) {
  // (qx-px)(ry-py) - (qy-py)(rx-px), expanded so every product is of inputs.
  const std::array<TwoTerm, 6> products = {
      two_product(q.x, r.y),  two_product(-q.x, p.y), two_product(-p.x, r.y),
      two_product(-q.y, r.x), two_product(q.y, p.x),  two_product(p.y, r.x),
  };
  Expansion e;
  for (const auto& t : products) {
    e.grow(t.lo);
    e.grow(t.hi);
  }
  return e.sign();
}

int sign_of(Orientation o) { return static_cast<int>(o); }

bool lex_less(Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); }

// Collinear closed segments overlap in more than one point.
bool collinear_overlap(const Segment& s1, const Segment& s2) {
  auto [lo1, hi1] = std::minmax(s1.a, s1.b, lex_less);
  auto [lo2, hi2] = std::minmax(s2.a, s2.b, lex_less);
  const Point lo = lex_less(lo1, lo2) ? lo2 : lo1;
  const Point hi = lex_less(hi1, hi2) ? hi1 : hi2;
  return lex_less(lo, hi);
}

// r lies on the closed segment pq, given that the three are collinear.
bool within_box(Point p, Point q, Point r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

struct PairCandidate {
  double d2 = -1.0;
  IndexPair pair{0, 0};

  [[nodiscard]] bool better_than(const PairCandidate& o) const {
    if (d2 != o.d2) return d2 > o.d2;
    return pair < o.pair;
  }
};

template <typename Admissible>
PairCandidate scan_row(std::span<const Point> points, std::size_t i, Admissible&& admissible) {
  PairCandidate best;
  for (std::size_t j = i + 1; j < points.size(); ++j) {
    if (!admissible(i, j)) continue;
    const PairCandidate c{dist2(points[i], points[j]), {i, j}};
    if (best.d2 < 0.0 || c.better_than(best)) best = c;
  }
  return best;
}

template <typename Admissible>
PairCandidate farthest_pair_serial(std::span<const Point> points, Admissible&& admissible) {
  PairCandidate best;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const PairCandidate row = scan_row(points, i, admissible);
    if (row.d2 >= 0.0 && (best.d2 < 0.0 || row.better_than(best))) best = row;
  }
  return best;
}

template <typename Admissible>
PairCandidate farthest_pair_parallel(std::span<const Point> points, Admissible&& admissible) {
  PairCandidate best;
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel
  {
    PairCandidate local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const PairCandidate row = scan_row(points, static_cast<std::size_t>(i), admissible);
      if (row.d2 >= 0.0 && (local.d2 < 0.0 || row.better_than(local))) local = row;
    }
#pragma omp critical(longtree_farthest_pair)
    {
      if (local.d2 >= 0.0 && (best.d2 < 0.0 || local.better_than(best))) best = local;
    }
  }
  return best;
}

void require_two(std::span<const Point> points) {
  if (points.size() < 2) throw std::invalid_argument("too few points");
}

void require_colors(std::span<const Point> points, std::span<const long long> colors) {
  if (colors.size() != points.size()) throw std::invalid_argument("color list size mismatch");
}

}  // namespace

bool approx_leq(double a, double b) {
  return a <= b + kMetricTolerance * std::max(std::abs(a), std::abs(b));
}

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double dist(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

double dist2(Point p, Point q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Orientation orientation(Point p, Point q, Point r) {
  constexpr double kEps = 0x1p-53;
  constexpr double kBound = (3.0 + 16.0 * kEps) * kEps;
  const double left = (q.x - p.x) * (r.y - p.y);
  const double right = (q.y - p.y) * (r.x - p.x);
  const double det = left - right;
  const double bound = kBound * (std::abs(left) + std::abs(right));
  int s = 0;
  if (det > bound) {
    s = 1;
  } else if (-det > bound) {
    s = -1;
  } else {
    s = exact_orientation_sign(p, q, r);
  }
  return s > 0 ? Orientation::left : (s < 0 ? Orientation::right : Orientation::collinear);
}

bool segments_cross(const Segment& s1, const Segment& s2) {
  if (s1.degenerate() || s2.degenerate()) throw std::invalid_argument("degenerate segment");
  const Point a = s1.a, b = s1.b, c = s2.a, d = s2.b;
  const int o1 = sign_of(orientation(a, b, c));
  const int o2 = sign_of(orientation(a, b, d));
  if (o1 == 0 && o2 == 0) return collinear_overlap(s1, s2);
  const int o3 = sign_of(orientation(c, d, a));
  const int o4 = sign_of(orientation(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  // Not collinear, so the segments share at most one point; it is a crossing
  // unless that point is an endpoint of both.
  if (o1 == 0 && within_box(a, b, c)) return !(c == a || c == b);
  if (o2 == 0 && within_box(a, b, d)) return !(d == a || d == b);
  if (o3 == 0 && within_box(c, d, a)) return !(a == c || a == d);
  if (o4 == 0 && within_box(c, d, b)) return !(b == c || b == d);
  return false;
}

IndexPair diametral_pair(std::span<const Point> points) {
  require_two(points);
  return farthest_pair_parallel(points, [](std::size_t, std::size_t) { return true; }).pair;
}

IndexPair diametral_pair_serial(std::span<const Point> points) {
  require_two(points);
  return farthest_pair_serial(points, [](std::size_t, std::size_t) { return true; }).pair;
}

IndexPair bichromatic_diametral_pair(std::span<const Point> points,
                                     std::span<const long long> colors) {
  require_two(points);
  require_colors(points, colors);
  const auto best = farthest_pair_parallel(
      points, [colors](std::size_t i, std::size_t j) { return colors[i] != colors[j]; });
  if (best.d2 < 0.0) throw std::invalid_argument("no bichromatic pair");
  return best.pair;
}

IndexPair bichromatic_diametral_pair_serial(std::span<const Point> points,
                                            std::span<const long long> colors) {
  require_two(points);
  require_colors(points, colors);
  const auto best = farthest_pair_serial(
      points, [colors](std::size_t i, std::size_t j) { return colors[i] != colors[j]; });
  if (best.d2 < 0.0) throw std::invalid_argument("no bichromatic pair");
  return best.pair;
}

Point Frame::apply(Point p) const {
  const Point t = p + translation;
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  return {scale * (c * t.x - s * t.y), scale * (s * t.x + c * t.y)};
}

Point Frame::invert(Point p) const {
  const Point u{p.x / scale, p.y / scale};
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  return Point{c * u.x + s * u.y, -s * u.x + c * u.y} - translation;
}

std::vector<Point> Frame::apply(std::span<const Point> points) const {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const Point p : points) out.push_back(apply(p));
  return out;
}

FramedPoints canonical_frame(std::span<const Point> points, std::size_t i, std::size_t j,
                             TargetLength target) {
  if (i >= points.size() || j >= points.size()) throw std::out_of_range("frame index");
  const Point origin = points[i];
  const Point v = points[j] - origin;
  const double len = std::hypot(v.x, v.y);
  if (len == 0.0) throw std::invalid_argument("coincident frame points");
  Frame frame;
  frame.translation = {-origin.x, -origin.y};
  frame.rotation = -std::atan2(v.y, v.x);
  frame.scale = target == TargetLength::unit ? 1.0 / len : 1.0;
  FramedPoints out{frame, frame.apply(points)};
  out.points[i] = {0.0, 0.0};
  out.points[j] = {target == TargetLength::unit ? 1.0 : len, 0.0};
  return out;
}

bool in_disk(Point p, Point center, double radius) { return approx_leq(dist(p, center), radius); }

bool in_ellipse(Point p, Point f1, Point f2, double sum) {
  const double focal = dist(f1, f2);
  if (!approx_leq(focal, sum)) throw std::invalid_argument("empty ellipse");
  return approx_leq(dist(p, f1) + dist(p, f2), sum);
}

std::vector<Point> circle_circle_intersections(Point c1, double r1, Point c2, double r2) {
  const double d = dist(c1, c2);
  if (d == 0.0 || r1 <= 0.0 || r2 <= 0.0) return {};
  const double outer = r1 + r2;
  const double inner = std::abs(r1 - r2);
  const bool tangent_outer = std::abs(d - outer) <= kMetricTolerance * outer;
  const bool tangent_inner = std::abs(d - inner) <= kMetricTolerance * std::max(r1, r2);
  if (!tangent_outer && !tangent_inner && (d > outer || d < inner)) return {};

  const Point u{(c2.x - c1.x) / d, (c2.y - c1.y) / d};
  const double along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  if (tangent_outer || tangent_inner) {
    const double a = std::clamp(along, -r1, r1);
    return {c1 + a * u};
  }
  const double h = std::sqrt(std::max(r1 * r1 - along * along, 0.0));
  const Point base = c1 + along * u;
  const Point perp{-u.y, u.x};
  std::vector<Point> out = {base + h * perp, base - h * perp};
  std::sort(out.begin(), out.end(), [](Point p, Point q) {
    if (p.y != q.y) return p.y > q.y;
    return p.x < q.x;
  });
  return out;
}

}  // namespace longtree
