#include "longtree/stnb.hpp"

#include <cmath>
#include <stdexcept>

namespace longtree {

std::string_view to_string(StnbCandidate c) {
  switch (c) {
    case StnbCandidate::S1: return "S1";
    case StnbCandidate::S2: return "S2";
    case StnbCandidate::S3: return "S3";
    case StnbCandidate::D: return "D";
    case StnbCandidate::exact: return "exact";
  }
  return "?";
}

std::vector<Point> StnbSolution::points(const NeighborhoodSet& nbs) const {
  std::vector<Point> out;
  out.reserve(representatives.size());
  for (const std::size_t k : representatives) out.push_back(nbs.point(k));
  return out;
}

StnbParams stnb_params(double delta) {
  StnbParams p;
  p.delta = delta;
  p.omega = 6.0 * delta / std::sqrt(3.0) - 1.0;
  p.ellipse_sum = p.omega + 2.0 * delta;
  p.lens_radius = 2.0 * delta;
  return p;
}

StnbSolution build_double_star(const NeighborhoodSet& nbs, std::size_t a, std::size_t b) {
  const std::size_t n = nbs.size();
  if (n < 2) throw std::invalid_argument("need at least two neighborhoods");
  const std::size_t xa = nbs.owner(a);
  const std::size_t xb = nbs.owner(b);
  if (xa == xb) throw std::invalid_argument("double-star centers share a neighborhood");
  const Point pa = nbs.point(a);
  const Point pb = nbs.point(b);

  StnbSolution sol;
  sol.candidate = StnbCandidate::D;
  sol.representatives.assign(n, 0);
  sol.representatives[xa] = a;
  sol.representatives[xb] = b;
  sol.tree = Tree(n);
  sol.tree.add_edge(xa, xb);
  double length = dist(pa, pb);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == xa || i == xb) continue;
    const std::size_t p = farthest_vertex_in(nbs, i, pa);
    const std::size_t q = farthest_vertex_in(nbs, i, pb);
    const double ap = dist(pa, nbs.point(p));
    const double bq = dist(pb, nbs.point(q));
    if (approx_leq(bq, ap)) {
      sol.representatives[i] = p;
      sol.tree.add_edge(xa, i);
      length += ap;
    } else {
      sol.representatives[i] = q;
      sol.tree.add_edge(xb, i);
      length += bq;
    }
  }
  sol.length = length;
  return sol;
}

StnbSolution longest_spanning_star_nb(const NeighborhoodSet& nbs, std::size_t center,
                                      StnbCandidate tag) {
  if (center >= nbs.vertex_count()) throw std::out_of_range("star center");
  const std::size_t n = nbs.size();
  const std::size_t own = nbs.owner(center);
  const Point pc = nbs.point(center);
  StnbSolution sol;
  sol.candidate = tag;
  sol.representatives.assign(n, 0);
  sol.representatives[own] = center;
  sol.tree = Tree(n);
  double length = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == own) continue;
    const std::size_t far = farthest_vertex_in(nbs, i, pc);
    sol.representatives[i] = far;
    sol.tree.add_edge(own, i);
    length += dist(pc, nbs.point(far));
  }
  sol.length = length;
  return sol;
}

StnbReport solve_stnb(const NeighborhoodSet& nbs) {
  const auto points = nbs.points();
  const auto [a, b] = bichromatic_diametral_pair(points, nbs.colors());
  const Point pa = nbs.point(a);
  const Point pb = nbs.point(b);

  StnbReport report;
  report.diametral = {a, b};
  report.ab_len = dist(pa, pb);
  report.upper_bound = static_cast<double>(nbs.size() - 1) * report.ab_len;
  report.a_prime = farthest_vertex_in(nbs, nbs.owner(a), pa);
  report.b_prime = farthest_vertex_in(nbs, nbs.owner(b), pb);

  std::size_t c = 0;
  double best_sum = -1.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double s = dist(pa, points[k]) + dist(pb, points[k]);
    if (s > best_sum) {
      best_sum = s;
      c = k;
    }
  }
  report.c = c;

  const std::array<StnbSolution, 4> candidates = {
      longest_spanning_star_nb(nbs, report.a_prime, StnbCandidate::S1),
      longest_spanning_star_nb(nbs, report.b_prime, StnbCandidate::S2),
      longest_spanning_star_nb(nbs, c, StnbCandidate::S3),
      build_double_star(nbs, a, b),
  };
  std::size_t winner = 0;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    report.candidate_lengths[k] = candidates[k].length;
    if (candidates[k].length > candidates[winner].length) winner = k;
  }
  report.solution = candidates[winner];
  return report;
}

StnbVertexRegions classify_stnb_point(Point p, const StnbParams& params) {
  const Point a{0.0, 0.0};
  const Point b{1.0, 0.0};
  StnbVertexRegions r;
  const bool in_da1 = in_disk(p, a, 1.0);
  const bool in_db1 = in_disk(p, b, 1.0);
  r.in_L = in_da1 && in_db1;
  r.in_L1 = in_db1 && in_disk(p, a, params.lens_radius);
  r.in_L2 = in_da1 && in_disk(p, b, params.lens_radius);
  r.in_Lprime = in_disk(p, a, params.delta) && in_disk(p, b, params.delta);
  r.in_E = in_ellipse(p, a, b, params.ellipse_sum);
  r.in_Q = (r.in_L1 || r.in_L2) && !r.in_E;
  return r;
}

StnbRegionReport stnb_region_report(const NeighborhoodSet& nbs) {
  StnbRegionReport rep;
  rep.params = stnb_params();
  rep.diametral = bichromatic_diametral_pair(nbs.points(), nbs.colors());
  const auto [a, b] = rep.diametral;
  rep.framed = canonical_frame(nbs.points(), a, b, TargetLength::unit);
  const auto& pts = rep.framed.points;
  rep.vertices.reserve(pts.size());
  for (const Point p : pts) {
    rep.vertices.push_back(classify_stnb_point(p, rep.params));
    rep.any_in_Q = rep.any_in_Q || rep.vertices.back().in_Q;
  }
  const double interior = rep.params.delta * (1.0 - kMetricTolerance);
  for (std::size_t i = 0; i < nbs.size(); ++i) {
    bool inside = true;
    for (std::size_t k = nbs.begin(i); k < nbs.end(i) && inside; ++k) {
      inside = dist(pts[k], Point{0.0, 0.0}) < interior && dist(pts[k], Point{1.0, 0.0}) < interior;
    }
    if (inside) ++rep.neighborhoods_inside_Lprime;
  }
  rep.aa_prime = dist(pts[a], pts[farthest_vertex_in(nbs, nbs.owner(a), nbs.point(a))]);
  rep.bb_prime = dist(pts[b], pts[farthest_vertex_in(nbs, nbs.owner(b), nbs.point(b))]);
  return rep;
}

}  // namespace longtree
