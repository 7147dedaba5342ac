#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "longtree/analysis.hpp"
#include "longtree/error.hpp"
#include "longtree/instances.hpp"
#include "longtree/ncst.hpp"
#include "longtree/oracles.hpp"

using namespace longtree;

namespace {

constexpr double kDelta = 0.519;
constexpr double kOmega = 0.16;

void require_valid(const Tree& t, const std::vector<Point>& pts) {
  REQUIRE_FALSE(validate_spanning_tree(t, pts));
  REQUIRE(is_noncrossing(t, pts).noncrossing);
}

Point polar(double r, double deg) {
  const double t = deg * std::numbers::pi / 180.0;
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace

TEST_CASE("ncst_params") {
  const NcstParams one = ncst_params(1.0);
  CHECK(one.d == doctest::Approx(0.9633911368015414).epsilon(1e-14));
  CHECK(std::abs(one.alpha_hat - 0.133809) < 1e-6);
  CHECK(one.alpha_hat == doctest::Approx(0.13380952380952377).epsilon(1e-14));
  CHECK(one.lambda == doctest::Approx(1.7978687382564944).epsilon(1e-14));
  CHECK(one.lambda == doctest::Approx(2 * std::sqrt(3.0) * kDelta).epsilon(1e-14));
  CHECK(one.gamma == doctest::Approx(1.2839857651245559).epsilon(1e-14));
  CHECK(ncst_params(one.d).lambda == doctest::Approx(1.834477601454953).epsilon(1e-14));
  CHECK(std::abs((2 - 3 * kOmega + (kOmega - 1) * (one.alpha_hat + one.beta_hat)) / 2 - kDelta) < 1e-12);
  for (double ab = one.d; ab <= 1.0; ab += 0.005) {
    const NcstParams p = ncst_params(ab);
    CHECK(std::abs((ab + p.alpha_hat * (p.gamma - ab)) / (2 * ab) - kDelta) < 1e-12);
  }
  CHECK_THROWS_AS(ncst_params(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ncst_params(1.01), std::invalid_argument);
  CHECK_NOTHROW(ncst_params(1.0 + 1e-10));
}

TEST_CASE("region classifier") {
  const RegionClassifier rc(1.0);
  const PointRegions mid = rc.label({0.5, 0});
  CHECK(mid.strip == Strip::middle);
  CHECK(mid.in_E2);
  CHECK(mid.in_M);
  CHECK_FALSE(mid.in_Q);

  const PointRegions at_a = rc.label({0, 0});
  CHECK(at_a.strip == Strip::left);
  CHECK_FALSE(at_a.in_Q);
  CHECK(rc.label({1, 0}).strip == Strip::right);
  CHECK(rc.strip({kOmega, 0.3}) == Strip::middle);
  CHECK(rc.strip({1 - kOmega, -0.3}) == Strip::middle);

  SUBCASE("(0.5, 0.9) lies outside L at |ab| = 1") {
    const PointRegions r = rc.label({0.5, 0.9});
    CHECK_FALSE(r.in_L);
    CHECK_FALSE(r.in_Q);
    CHECK(2 * std::sqrt(1.06) > rc.params().lambda);
  }
  SUBCASE("the same triangle scaled to diameter 1 puts the apex in Q") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0.5, 0.9}};
    const Classification c = classify_points(pts, 0, 1);
    CHECK(c.classifier.params().ab_len == doctest::Approx(1 / std::sqrt(1.06)).epsilon(1e-14));
    CHECK(c.labels[2].in_L);
    CHECK(c.labels[2].in_Q);
    CHECK(c.q_count == 1);
  }
}

TEST_CASE("classification fractions") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto pts = generate_points({GenKind::uniform_disk, 12, seed, std::nullopt, std::nullopt});
    const auto [a, b] = diametral_pair(pts);
    const Classification c = classify_points(pts, a, b);
    CHECK(c.alpha + c.beta <= 1.0 + 1e-12);
    CHECK(c.beta <= c.beta_prime + 1e-12);
    for (const PointRegions& r : c.labels) {
      CHECK(r.in_L);
      if (r.in_M) CHECK(r.strip == Strip::middle);
      if (r.in_Q) CHECK_FALSE(r.in_E1);
    }
  }
}

TEST_CASE("build_Ta") {
  SUBCASE("all points in the right strip give the star at a") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0.9, 0.2}, {0.95, -0.3}};
    const NcstCandidate t = build_Ta(pts, 0, 1);
    CHECK(t.tree.sorted_edges() == star(pts, 0).sorted_edges());
    CHECK(t.noncrossing);
  }
  SUBCASE("left point joins the ray of its wedge") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0.05, 0.02}, {0.9, 0.3}};
    const NcstCandidate t = build_Ta(pts, 0, 1);
    CHECK(t.tree.sorted_edges() == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
    CHECK(t.noncrossing);
    require_valid(t.tree, pts);
  }
  SUBCASE("middle points attach to the construction") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0.3, 0.2}, {0.5, -0.1}, {0.7, 0.05}, {0.4, 0.4}};
    const NcstCandidate t = build_Ta(pts, 0, 1);
    CHECK(t.noncrossing);
    require_valid(t.tree, pts);
  }
  SUBCASE("Tb is Ta rooted at b") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0.05, 0.02}, {0.9, 0.3}, {0.5, -0.2}};
    const NcstCandidate ta = build_Ta(pts, 1, 0);
    const NcstCandidate tb = build_Tb(pts, 0, 1);
    CHECK(tb.tag == NcstTag::Tb);
    CHECK(tb.tree.sorted_edges() == ta.tree.sorted_edges());
  }
  CHECK_THROWS(build_Ta(std::vector<Point>{{0, 0}, {1, 0}}, 0, 0));
}

TEST_CASE("build_Ta edge bounds for points inside the lens") {
  Rng rng(31);
  for (int k = 0; k < 300; ++k) {
    const double ab = rng.uniform(ncst_params(1).d, 1.0);
    std::vector<Point> pts{{0, 0}, {ab, 0}};
    const std::size_t n = 3 + rng.index(10);
    while (pts.size() < n) {
      const Point p{rng.uniform(ab - 1, 1), rng.uniform(-1, 1)};
      if (dist(p, pts[0]) < 1 && dist(p, pts[1]) < 1) pts.push_back(p);
    }
    const RegionClassifier rc(ab);
    const NcstCandidate t = build_Ta(pts, 0, 1);
    for (const Edge e : t.tree.edges) {
      const Strip si = rc.strip(pts[e.i]), sj = rc.strip(pts[e.j]);
      const double len = dist(pts[e.i], pts[e.j]);
      if (e.i == 0 && sj == Strip::right) CHECK(len >= (1 - kOmega) * ab);
      if ((si == Strip::left && e.i != 0 && sj == Strip::right) || (sj == Strip::left && si == Strip::right)) {
        CHECK(len >= (1 - 2 * kOmega) * ab);
      }
    }
  }
}

TEST_CASE("solve_ncst small cases") {
  const std::vector<Point> two{{0, 0}, {2, 1}};
  const NcstReport r2 = solve_ncst(two);
  CHECK(r2.best.tree.sorted_edges() == std::vector<Edge>{{0, 1}});
  CHECK(r2.best.length == doctest::Approx(std::sqrt(5.0)));

  CHECK_THROWS_AS(solve_ncst(std::vector<Point>{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(solve_ncst(std::vector<Point>{{0, 0}, {1, 1}, {0, 0}}), "duplicate points", InputError);

  SUBCASE("collinear input falls back to the path") {
    const std::vector<Point> line{{0, 0}, {3, 0}, {1, 0}, {2, 0}};
    const NcstReport r = solve_ncst(line);
    require_valid(r.best.tree, line);
    CHECK(r.best.length == doctest::Approx(3.0));
  }
  SUBCASE("square") {
    const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const NcstReport r = solve_ncst(sq);
    require_valid(r.best.tree, sq);
    CHECK(r.best.length == doctest::Approx(2 + std::sqrt(2.0)));
  }
}

TEST_CASE("two-cluster instance") {
  const auto pts = generate_points({GenKind::two_cluster, 20, 9, 1e-4, std::nullopt});
  const NcstReport r = solve_ncst(pts);
  require_valid(r.best.tree, pts);
  CHECK(r.best.length >= 10 * (1 - 2e-4));
  const double ratio = best_star(pts).length / tree_length(max_spanning_tree(pts), pts);
  CHECK(ratio == doctest::Approx(0.5).epsilon(0.06));
}

TEST_CASE("solve_ncst against the exact oracle") {
  double worst = 1.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GenKind kind = seed % 3 == 0 ? GenKind::uniform_square : seed % 3 == 1 ? GenKind::uniform_disk
                                                                                  : GenKind::two_cluster;
    const auto pts = generate_points({kind, 5 + seed % 4, 3000 + seed, std::nullopt, std::nullopt});
    const NcstReport r = solve_ncst(pts);
    require_valid(r.best.tree, pts);
    const double opt = tree_length(exact_ncst(pts, 8), pts);
    CHECK(r.best.length >= 0.519 * opt);
    CHECK(r.best.length <= opt * (1 + 1e-12));
    worst = std::min(worst, r.best.length / opt);
  }
  MESSAGE("minimum observed ratio ", worst);
}

TEST_CASE("solve_ncst invariants") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto pts = generate_points({GenKind::uniform_disk, 3 + seed % 30, seed, std::nullopt, std::nullopt});
    const NcstReport r = solve_ncst(pts);
    require_valid(r.best.tree, pts);
    CHECK(r.best.noncrossing);
    CHECK(r.best.length >= r.best_star_length);
    CHECK(r.best_star_length >= pts.size() / 2.0 * r.diameter * (1 - 1e-12));
    CHECK(r.upper_bound == doctest::Approx((pts.size() - 1) * r.diameter));
  }
}

TEST_CASE("parallel and serial solvers agree, with and without pruning") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto pts = generate_points({GenKind::uniform_square, 4 + seed, seed, std::nullopt, std::nullopt});
    for (const bool prune : {true, false}) {
      NcstOptions o;
      o.prune = prune;
      const NcstReport p = solve_ncst(pts, o);
      const NcstReport s = solve_ncst_serial(pts, o);
      CHECK(p.best.tree.sorted_edges() == s.best.tree.sorted_edges());
      CHECK(p.best.label() == s.best.label());
      CHECK(p.best.length == s.best.length);
    }
    NcstOptions all;
    all.prune = false;
    CHECK(solve_ncst(pts, all).best.length >= solve_ncst(pts).best.length);
  }
}

TEST_CASE("winning candidate is scale invariant") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto pts = generate_points({GenKind::uniform_disk, 6 + seed % 10, 40 + seed, std::nullopt, std::nullopt});
    std::vector<Point> scaled;
    for (const Point p : pts) scaled.push_back({3.7 * p.x, 3.7 * p.y});
    const NcstReport r = solve_ncst(pts);
    const NcstReport s = solve_ncst(scaled);
    CHECK(r.best.label() == s.best.label());
    CHECK(r.best.tree.sorted_edges() == s.best.tree.sorted_edges());
  }
}

TEST_CASE("a point of Q makes the best star long enough") {
  int engaged = 0;
  Rng rng(77);
  for (int k = 0; k < 300; ++k) {
    std::vector<Point> pts{{0, 0}, {1, 0}, {0.5, 0.84 + 0.02 * rng.uniform()}};
    const std::size_t n = 4 + rng.index(8);
    while (pts.size() < n) {
      const Point p{rng.uniform(0, 1), rng.uniform(-0.8, 0.8)};
      if (dist(p, pts[0]) < 1 && dist(p, pts[1]) < 1 && dist(p, pts[2]) < 1) pts.push_back(p);
    }
    const double diam = dist(pts[diametral_pair(pts).first], pts[diametral_pair(pts).second]);
    const double star_len = best_star(pts).length;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        if (dist(pts[a], pts[b]) < ncst_params(1).d * diam) continue;
        if (classify_points(pts, a, b).q_count == 0) continue;
        ++engaged;
        CHECK(star_len >= kDelta * (pts.size() - 1) * diam);
      }
    }
  }
  CHECK(engaged > 0);
}

TEST_CASE("lemma_diagnostics") {
  SUBCASE("no point in Q") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0.5, 0.1}};
    const LemmaDiagnostics d = lemma_diagnostics(pts, 0, 1);
    CHECK(d.q_points == 0);
    CHECK_FALSE(d.q_distance_margin);
    CHECK_FALSE(d.steiner_margin);
  }
  SUBCASE("apex in Q") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0.5, 0.9}};
    const LemmaDiagnostics d = lemma_diagnostics(pts, 0, 1);
    CHECK(d.q_points == 1);
    REQUIRE(d.q_distance_margin);
    CHECK(*d.q_distance_margin == doctest::Approx(1.0 - (d.params.lambda - 1)).epsilon(1e-12));
    CHECK(*d.q_distance_margin > 0);
    REQUIRE(d.steiner_margin);
    CHECK(*d.steiner_margin > 0);
    CHECK_FALSE(d.f1_precondition);
  }
  SUBCASE("M point at the midpoint with |ab| = d") {
    const double d = ncst_params(1).d;
    const std::vector<Point> pts{{0, 0}, {d, 0}, {0.5, 0}, polar(1, 50)};
    const LemmaDiagnostics g = lemma_diagnostics(pts, 0, 1);
    CHECK(g.q_points == 0);
    CHECK(g.m_points == 1);
    CHECK(g.f1_precondition);
    REQUIRE(g.f1_margin);
    CHECK(dist(pts[2], pts[3]) == doctest::Approx(0.7792).epsilon(1e-4));
    CHECK(*g.f1_margin == doctest::Approx(f1(d) - dist(pts[2], pts[3])).epsilon(1e-12));
    CHECK(dist(pts[2], pts[3]) <= 0.914);
  }
}

TEST_CASE("lemma_diagnostics margins on random instances") {
  int f1_checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto pts = generate_points({GenKind::uniform_disk, 5 + seed % 10, 900 + seed, std::nullopt, std::nullopt});
    const auto [a, b] = diametral_pair(pts);
    const LemmaDiagnostics d = lemma_diagnostics(pts, a, b);
    if (d.q_distance_margin) CHECK(*d.q_distance_margin > 0);
    if (d.steiner_margin) CHECK(*d.steiner_margin > 0);
    if (d.f1_precondition && d.f1_margin) {
      ++f1_checked;
      CHECK(*d.f1_margin > 0);
    }
  }
  CHECK(f1_checked > 0);
}
