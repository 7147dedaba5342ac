#include "longtree/ncst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <omp.h>

#include "longtree/analysis.hpp"
#include "longtree/error.hpp"

namespace longtree {

NcstParams ncst_params(double ab_len) {
  if (!(ab_len > 0.0) || ab_len > 1.0 + 1e-9) throw std::invalid_argument("|ab| outside (0, 1]");
  NcstParams p;
  p.d = 1.0 / (2.0 * p.delta);
  p.alpha_hat = (2.0 * p.delta + 3.0 * p.omega - 2.0) / (p.omega - 1.0) - p.beta_hat;
  p.ab_len = ab_len;
  p.lambda = 6.0 * p.delta / std::sqrt(3.0) + 1.0 - ab_len;
  p.gamma = (2.0 * p.delta + p.alpha_hat - 1.0) * ab_len / p.alpha_hat;
  return p;
}

RegionClassifier::RegionClassifier(double ab_len) : params_(ncst_params(ab_len)) {}

Strip RegionClassifier::strip(Point p) const {
  const double ab = params_.ab_len;
  if (p.x < params_.omega * ab) return Strip::left;
  if (p.x > (1.0 - params_.omega) * ab) return Strip::right;
  return Strip::middle;
}

PointRegions RegionClassifier::label(Point p) const {
  const Point a{0.0, 0.0};
  const Point b{params_.ab_len, 0.0};
  PointRegions r;
  r.strip = strip(p);
  r.in_L = in_disk(p, a, 1.0) && in_disk(p, b, 1.0);
  r.in_Lprime = in_disk(p, a, params_.ab_len) && in_disk(p, b, params_.ab_len);
  r.in_E1 = in_ellipse(p, a, b, params_.lambda);
  r.in_E2 = in_ellipse(p, a, b, params_.gamma);
  r.in_Q = r.in_L && !r.in_E1;
  r.in_M = r.in_L && r.in_E2 && r.strip == Strip::middle;
  return r;
}

Classification classify_points(std::span<const Point> pts, std::size_t a, std::size_t b) {
  const auto [u, v] = diametral_pair(pts);
  const double diameter = dist(pts[u], pts[v]);
  FramedPoints framed = canonical_frame(pts, a, b, TargetLength::preserve);
  framed.frame.scale = 1.0 / diameter;
  for (Point& p : framed.points) p = (1.0 / diameter) * p;
  const double ab = framed.points[b].x;
  Classification out{RegionClassifier(std::min(ab, 1.0)), std::move(framed), {}, 0.0, 0.0, 0.0, 0};
  std::size_t outside_e2 = 0, in_m = 0, middle = 0;
  for (const Point p : out.framed.points) {
    const PointRegions r = out.classifier.label(p);
    out.labels.push_back(r);
    if (r.in_L && !r.in_E2) ++outside_e2;
    if (r.in_M) ++in_m;
    if (r.strip == Strip::middle) ++middle;
    if (r.in_Q) ++out.q_count;
  }
  const double n = static_cast<double>(pts.size());
  out.alpha = outside_e2 / n;
  out.beta = in_m / n;
  out.beta_prime = middle / n;
  return out;
}

std::string to_string(NcstTag tag) {
  switch (tag) {
    case NcstTag::star: return "star";
    case NcstTag::path: return "path";
    case NcstTag::Ta: return "Ta";
    case NcstTag::Tb: return "Tb";
  }
  return "?";
}

std::string NcstCandidate::label() const {
  std::string s = to_string(tag);
  if (center) s += "(" + std::to_string(*center) + ")";
  if (guess) s += "(" + std::to_string(guess->first) + "," + std::to_string(guess->second) + ")";
  return s;
}

namespace {

bool same_ray(Point apex, Point p, Point q) {
  if (orientation(apex, p, q) != Orientation::collinear) return false;
  const Point u = p - apex;
  const Point w = q - apex;
  return u.x * w.x + u.y * w.y > 0.0;
}

struct Ray {
  double angle = 0.0;
  std::size_t end = 0;  // farthest point on the ray, the red endpoint p_i
};

// Tree under construction with its segments kept for visibility queries.
class PlanarTree {
 public:
  explicit PlanarTree(std::span<const Point> pts) : pts_(pts), tree_(pts.size()), adj_(pts.size()) {}

  void connect(std::size_t u, std::size_t v) {
    tree_.add_edge(u, v);
    segs_.push_back({pts_[u], pts_[v]});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    members_.push_back(u);
    members_.push_back(v);
  }

  void add_root(std::size_t r) { members_.push_back(r); }

  [[nodiscard]] bool sees(Point x, std::size_t u) const {
    const Segment s{x, pts_[u]};
    if (s.degenerate()) return false;
    for (const Segment& e : segs_) {
      if (segments_cross(s, e)) return false;
    }
    return true;
  }

  // Distinct vertices currently in the tree.
  [[nodiscard]] std::vector<std::size_t> vertices() const {
    std::vector<std::size_t> v = members_;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t u) const { return adj_[u]; }
  [[nodiscard]] Tree take() { return std::move(tree_); }

 private:
  std::span<const Point> pts_;
  Tree tree_;
  std::vector<Segment> segs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> members_;
};

struct RadialTree {
  Tree tree;
  bool attached_all = true;  // every middle point found a visible vertex
};

// Orientation predicates run on the input coordinates; the rotated frame is
// used only for strip membership and radial order.
RadialTree construct_radial(std::span<const Point> pts, std::size_t a, std::size_t b) {
  const std::size_t n = pts.size();
  const FramedPoints framed = canonical_frame(pts, a, b, TargetLength::preserve);
  const auto& f = framed.points;
  const double ab = f[b].x;
  constexpr double kOmega = 0.16;
  const auto angle = [&](std::size_t v) { return std::atan2(f[v].y, f[v].x); };

  std::vector<std::size_t> right, left, middle;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == a) continue;
    if (f[v].x > (1.0 - kOmega) * ab) {
      right.push_back(v);
    } else if (f[v].x < kOmega * ab) {
      left.push_back(v);
    } else {
      middle.push_back(v);
    }
  }
  const auto by_angle = [&](std::size_t u, std::size_t v) {
    const double au = angle(u), av = angle(v);
    if (au != av) return au < av;
    const double du = dist2(f[u], f[a]), dv = dist2(f[v], f[a]);
    if (du != dv) return du < dv;
    return u < v;
  };
  std::sort(right.begin(), right.end(), by_angle);

  // Red phase: one ray per direction from a through right-strip points. Any
  // point lying on a ray before its far end is threaded onto that ray.
  PlanarTree planar(pts);
  planar.add_root(a);
  std::vector<bool> used(n, false);
  used[a] = true;
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < right.size();) {
    std::size_t l = k + 1;
    while (l < right.size() && same_ray(pts[a], pts[right[k]], pts[right[l]])) ++l;
    double reach = 0.0;
    for (std::size_t t = k; t < l; ++t) reach = std::max(reach, dist2(pts[a], pts[right[t]]));
    std::vector<std::size_t> chain;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (same_ray(pts[a], pts[right[k]], pts[v]) && dist2(pts[a], pts[v]) <= reach) chain.push_back(v);
    }
    std::sort(chain.begin(), chain.end(), [&](std::size_t u, std::size_t v) {
      const double du = dist2(pts[a], pts[u]), dv = dist2(pts[a], pts[v]);
      return du != dv ? du < dv : u < v;
    });
    std::size_t prev = a;
    for (const std::size_t v : chain) {
      planar.connect(prev, v);
      used[v] = true;
      prev = v;
    }
    rays.push_back({angle(right[k]), prev});
    k = l;
  }

  // Blue phase: a left point joins p_i for the wedge between rays i and i+1;
  // above the top ray it joins p_m, below the bottom ray p_1. Points on line
  // ab count as below.
  for (const std::size_t v : left) {
    if (used[v]) continue;
    const bool above = orientation(pts[a], pts[b], pts[v]) == Orientation::left;
    double phi = angle(v);
    if (!above && phi > std::numbers::pi / 2.0) phi = -std::numbers::pi;
    std::size_t wedge = 0;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (rays[i].angle <= phi) wedge = i;
    }
    planar.connect(v, rays[wedge].end);
    used[v] = true;
  }

  // Green phase, in angular order around a: join the farther end of the
  // farthest fully visible edge, else the nearest visible vertex.
  std::sort(middle.begin(), middle.end(), by_angle);
  RadialTree out;
  for (const std::size_t x : middle) {
    if (used[x]) continue;
    std::vector<std::size_t> verts = planar.vertices();
    std::sort(verts.begin(), verts.end(), [&](std::size_t u, std::size_t v) {
      const double du = dist2(pts[x], pts[u]), dv = dist2(pts[x], pts[v]);
      return du != dv ? du > dv : u < v;
    });
    std::vector<signed char> seen(n, -1);
    const auto visible = [&](std::size_t u) {
      if (seen[u] < 0) seen[u] = planar.sees(pts[x], u) ? 1 : 0;
      return seen[u] == 1;
    };
    std::optional<std::size_t> target;
    for (const std::size_t u : verts) {
      if (!visible(u)) continue;
      const auto& nb = planar.neighbors(u);
      if (std::any_of(nb.begin(), nb.end(), visible)) {
        target = u;
        break;
      }
    }
    if (!target) {
      for (auto it = verts.rbegin(); it != verts.rend(); ++it) {
        if (visible(*it)) {
          target = *it;
          break;
        }
      }
    }
    if (!target) {
      out.attached_all = false;
      target = a;
    }
    planar.connect(*target, x);
    used[x] = true;
  }
  out.tree = planar.take();
  return out;
}

// Summed over the sorted edge list so equal trees get equal lengths.
double canonical_length(const Tree& t, std::span<const Point> pts) {
  return tree_length(Tree(t.n, t.sorted_edges()), pts);
}

NcstCandidate finish(std::span<const Point> pts, RadialTree radial, NcstTag tag, IndexPair guess,
                     bool validate) {
  NcstCandidate c;
  c.tag = tag;
  c.guess = guess;
  c.length = canonical_length(radial.tree, pts);
  c.tree = std::move(radial.tree);
  if (validate) {
    c.noncrossing = radial.attached_all && !validate_spanning_tree(c.tree, pts) &&
                    is_noncrossing(c.tree, pts).noncrossing;
  }
  return c;
}

IndexPair ordered(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

int tag_rank(NcstTag t) { return static_cast<int>(t); }

// Strict total order over candidates: longer first, then tag order, then
// the smaller center or guess.
bool better(const NcstCandidate& x, const NcstCandidate& y) {
  if (x.length != y.length) return x.length > y.length;
  if (x.tag != y.tag) return tag_rank(x.tag) < tag_rank(y.tag);
  if (x.center != y.center) return x.center < y.center;
  return x.guess < y.guess;
}

bool valid(const NcstCandidate& c, std::span<const Point> pts) {
  return !validate_spanning_tree(c.tree, pts) && is_noncrossing(c.tree, pts).noncrossing;
}

void require_distinct(std::span<const Point> pts) {
  std::vector<Point> sorted(pts.begin(), pts.end());
  const auto lex = [](Point p, Point q) { return p.x != q.x ? p.x < q.x : p.y < q.y; };
  std::sort(sorted.begin(), sorted.end(), lex);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate points");
  }
  for (const Point p : pts) {
    if (!is_finite(p)) throw InputError("non-finite coordinate");
  }
}

struct Setup {
  NcstReport report;
  NcstCandidate seed;  // longest valid guess-independent candidate
  std::vector<IndexPair> guesses;
};

Setup prepare(std::span<const Point> pts, const NcstOptions& opts) {
  if (pts.size() < 2) throw std::invalid_argument("too few points");
  require_distinct(pts);
  Setup s;
  const std::size_t n = pts.size();
  s.report.diametral = diametral_pair(pts);
  s.report.diameter = dist(pts[s.report.diametral.first], pts[s.report.diametral.second]);
  s.report.upper_bound = static_cast<double>(n - 1) * s.report.diameter;

  // Stars from longest down; a star with two leaves on one ray from its
  // center overlaps itself and is skipped.
  std::vector<std::pair<double, std::size_t>> stars;
  for (std::size_t c = 0; c < n; ++c) stars.emplace_back(star_length(pts, c), c);
  std::sort(stars.begin(), stars.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  bool discarded = false;
  bool found = false;
  for (const auto& [len, c] : stars) {
    NcstCandidate cand;
    cand.tag = NcstTag::star;
    cand.center = c;
    cand.tree = star(pts, c);
    cand.length = canonical_length(cand.tree, pts);
    if (valid(cand, pts)) {
      cand.noncrossing = true;
      s.report.best_star_length = cand.length;
      s.seed = std::move(cand);
      found = true;
      break;
    }
    discarded = true;
  }
  if (discarded) {
    NcstCandidate path;
    path.tag = NcstTag::path;
    path.tree = monotone_path(pts);
    path.length = canonical_length(path.tree, pts);
    path.noncrossing = valid(path, pts);
    if (path.noncrossing && (!found || better(path, s.seed))) {
      s.seed = std::move(path);
      found = true;
    }
  }
  if (!found) throw InputError("no noncrossing seed tree");

  const NcstParams unit = ncst_params(1.0);
  const double floor_len = unit.d * s.report.diameter;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (opts.prune && !approx_leq(floor_len, dist(pts[i], pts[j]))) {
        ++s.report.guesses_pruned;
        continue;
      }
      s.guesses.emplace_back(i, j);
    }
  }
  s.report.guesses_tried = s.guesses.size();
  return s;
}

// Offers Ta and Tb of one guess to the running best; only a candidate that
// would win is crossing-validated.
void offer_guess(std::span<const Point> pts, IndexPair g, NcstCandidate& best) {
  const auto [i, j] = g;
  for (const NcstTag tag : {NcstTag::Ta, NcstTag::Tb}) {
    RadialTree radial = tag == NcstTag::Ta ? construct_radial(pts, i, j) : construct_radial(pts, j, i);
    if (!radial.attached_all) continue;
    NcstCandidate c = finish(pts, std::move(radial), tag, g, false);
    if (!better(c, best)) continue;
    if (!valid(c, pts)) continue;
    c.noncrossing = true;
    best = std::move(c);
  }
}

}  // namespace

NcstCandidate build_Ta(std::span<const Point> pts, std::size_t a, std::size_t b) {
  if (a == b || a >= pts.size() || b >= pts.size()) throw std::invalid_argument("bad guess pair");
  return finish(pts, construct_radial(pts, a, b), NcstTag::Ta, ordered(a, b), true);
}

NcstCandidate build_Tb(std::span<const Point> pts, std::size_t a, std::size_t b) {
  if (a == b || a >= pts.size() || b >= pts.size()) throw std::invalid_argument("bad guess pair");
  return finish(pts, construct_radial(pts, b, a), NcstTag::Tb, ordered(a, b), true);
}

Tree monotone_path(std::span<const Point> pts) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
    if (pts[u].x != pts[v].x) return pts[u].x < pts[v].x;
    if (pts[u].y != pts[v].y) return pts[u].y < pts[v].y;
    return u < v;
  });
  Tree t(pts.size());
  for (std::size_t k = 1; k < order.size(); ++k) t.add_edge(order[k - 1], order[k]);
  return t;
}

NcstReport solve_ncst_serial(std::span<const Point> pts, const NcstOptions& opts) {
  Setup s = prepare(pts, opts);
  NcstCandidate best = s.seed;
  for (const IndexPair& g : s.guesses) offer_guess(pts, g, best);
  s.report.best = std::move(best);
  return s.report;
}

NcstReport solve_ncst(std::span<const Point> pts, const NcstOptions& opts) {
  Setup s = prepare(pts, opts);
  NcstCandidate best = s.seed;
  const auto count = static_cast<std::ptrdiff_t>(s.guesses.size());
#pragma omp parallel
  {
    NcstCandidate local = s.seed;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      offer_guess(pts, s.guesses[static_cast<std::size_t>(k)], local);
    }
#pragma omp critical(longtree_ncst_merge)
    {
      if (better(local, best)) best = std::move(local);
    }
  }
  s.report.best = std::move(best);
  return s.report;
}

namespace {

// Segment pq properly crosses the x-axis segment [0, ab].
bool crosses_ab(Point p, Point q, double ab) {
  if (!((p.y > 0.0 && q.y < 0.0) || (p.y < 0.0 && q.y > 0.0))) return false;
  const double t = p.y / (p.y - q.y);
  const double x = p.x + t * (q.x - p.x);
  return x >= 0.0 && x <= ab;
}

void take_min(std::optional<double>& slot, double v) {
  if (!slot || v < *slot) slot = v;
}

}  // namespace

LemmaDiagnostics lemma_diagnostics(std::span<const Point> pts, std::size_t a, std::size_t b) {
  const Classification cls = classify_points(pts, a, b);
  const auto& f = cls.framed.points;
  LemmaDiagnostics out;
  out.params = cls.classifier.params();
  const auto& prm = out.params;
  const Point pa = f[a], pb = f[b];
  for (std::size_t q = 0; q < f.size(); ++q) {
    if (!cls.labels[q].in_Q) continue;
    ++out.q_points;
    take_min(out.q_distance_margin, std::min(dist(pa, f[q]), dist(pb, f[q])) - (prm.lambda - 1.0));
    const Point torricelli = fermat_point(pa, pb, f[q]).steiner_point;
    take_min(out.steiner_margin,
             dist(torricelli, pa) + dist(torricelli, pb) + dist(torricelli, f[q]) - 3.0 * prm.delta);
    for (const Point p : f) {
      take_min(out.steiner_margin, dist(p, pa) + dist(p, pb) + dist(p, f[q]) - 3.0 * prm.delta);
    }
  }
  out.f1_precondition = out.q_points == 0 && approx_leq(prm.d, prm.ab_len);
  const double cap = f1(prm.d);
  for (std::size_t q = 0; q < f.size(); ++q) {
    if (!cls.labels[q].in_M) continue;
    ++out.m_points;
    for (std::size_t p = 0; p < f.size(); ++p) {
      if (p == q || crosses_ab(f[q], f[p], prm.ab_len)) continue;
      take_min(out.f1_margin, cap - dist(f[q], f[p]));
    }
  }
  return out;
}

}  // namespace longtree
