#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "longtree/analysis.hpp"
#include "longtree/error.hpp"
#include "longtree/instances.hpp"
#include "longtree/oracles.hpp"
#include "longtree/stnb.hpp"

using namespace longtree;

namespace {

NeighborhoodSet singletons(const std::vector<Point>& pts) {
  std::vector<Neighborhood> nbs;
  for (std::size_t i = 0; i < pts.size(); ++i) nbs.push_back({static_cast<ColorId>(i + 1), {{pts[i]}}});
  return NeighborhoodSet(std::move(nbs));
}

void require_one_per_color(const NeighborhoodSet& nbs, const StnbSolution& sol) {
  REQUIRE(sol.representatives.size() == nbs.size());
  for (std::size_t i = 0; i < nbs.size(); ++i) REQUIRE(nbs.owner(sol.representatives[i]) == i);
  REQUIRE_FALSE(validate_spanning_tree(sol.tree, sol.points(nbs)));
  REQUIRE(sol.length == doctest::Approx(tree_length(sol.tree, sol.points(nbs))).epsilon(1e-12));
}

}  // namespace

TEST_CASE("NeighborhoodSet validation") {
  CHECK_THROWS_AS(NeighborhoodSet({{1, {{Point{0, 0}}}}}), InputError);
  CHECK_THROWS_WITH(NeighborhoodSet({{1, {{Point{0, 0}}}}, {1, {{Point{1, 0}}}}}), "duplicate color");
  CHECK_THROWS_AS(NeighborhoodSet({{1, {}}, {2, {{Point{1, 0}}}}}), InputError);
  CHECK_THROWS_AS(NeighborhoodSet({{1, {Polygon{}}}, {2, {{Point{1, 0}}}}}), InputError);
  const NeighborhoodSet nbs({{5, {{Point{0, 0}, Point{1, 0}}, {Point{2, 2}}}}, {9, {{Point{3, 3}}}}});
  CHECK(nbs.size() == 2);
  CHECK(nbs.vertex_count() == 4);
  CHECK(nbs.count(0) == 3);
  CHECK(nbs.owner(3) == 1);
  CHECK(nbs.find_color(9) == 1);
  CHECK(nbs.find_color(4) == 2);
}

TEST_CASE("farthest_vertex_in") {
  const NeighborhoodSet nbs({{1, {{Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}}}}, {2, {{Point{7, 7}}}}});
  CHECK(farthest_vertex_in(nbs, 0, {0, 0}) == 2);
  CHECK(farthest_vertex_in(nbs, 1, {0, 0}) == 4);
  CHECK(farthest_vertex_in(nbs, 0, {0.5, 2}) == 0);
}

TEST_CASE("build_double_star") {
  SUBCASE("tie attaches to a") {
    const auto nbs = singletons({{0, 0}, {1, 0}, {0.5, 0.3}});
    const StnbSolution d = build_double_star(nbs, 0, 1);
    CHECK(d.tree.sorted_edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(d.length == doctest::Approx(1.58309518948453).epsilon(1e-14));
    CHECK(exact_stnb(nbs).length == doctest::Approx(d.length).epsilon(1e-14));
  }
  SUBCASE("two neighborhoods") {
    const auto nbs = singletons({{0, 0}, {2, 1}});
    const StnbSolution d = build_double_star(nbs, 0, 1);
    CHECK(d.tree.sorted_edges() == std::vector<Edge>{{0, 1}});
    CHECK(d.length == doctest::Approx(std::sqrt(5.0)));
  }
  SUBCASE("vertex beyond b joins a") {
    const auto nbs = singletons({{0, 0}, {1, 0}, {0.9, 0.1}});
    CHECK(build_double_star(nbs, 0, 1).tree.sorted_edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  }
  SUBCASE("same neighborhood") {
    const NeighborhoodSet nbs({{1, {{Point{0, 0}, Point{1, 0}}}}, {2, {{Point{3, 0}}}}});
    CHECK_THROWS(build_double_star(nbs, 0, 1));
  }
}

TEST_CASE("longest_spanning_star_nb") {
  const auto line = singletons({{0, 0}, {1, 0}, {2, 0}});
  CHECK(longest_spanning_star_nb(line, 1).length == 2.0);
  const auto two = singletons({{0, 0}, {3, 4}});
  CHECK(longest_spanning_star_nb(two, 0).length == 5.0);
  CHECK(longest_spanning_star_nb(two, 1).length == 5.0);
  const NeighborhoodSet nbs({{1, {{Point{0, 0}, Point{0.1, 0}}}}, {2, {{Point{1, 0}, Point{2, 0}}}}, {3, {{Point{0, 1}}}}});
  const StnbSolution s = longest_spanning_star_nb(nbs, 1, StnbCandidate::S1);
  CHECK(s.candidate == StnbCandidate::S1);
  CHECK(s.representatives == std::vector<std::size_t>{1, 3, 4});
  require_one_per_color(nbs, s);
}

TEST_CASE("solve_stnb") {
  SUBCASE("two neighborhoods give the bichromatic diameter") {
    const NeighborhoodSet nbs({{1, {{Point{0, 0}, Point{0.5, 0.2}}}}, {2, {{Point{1, 1}, Point{3, 0}}}}});
    const StnbReport r = solve_stnb(nbs);
    CHECK(r.solution.length == doctest::Approx(3.0));
    CHECK(r.ab_len == 3.0);
    require_one_per_color(nbs, r.solution);
  }
  SUBCASE("S1 is centered at a-prime") {
    const NeighborhoodSet nbs({{1, {{Point{0, 0}, Point{0.3, 0.4}}}}, {2, {{Point{1, 0}}}}, {3, {{Point{0.5, 0.5}}}}});
    const StnbReport r = solve_stnb(nbs);
    CHECK(r.diametral == IndexPair{0, 2});
    CHECK(r.a_prime == 1);
    const StnbSolution s1 = longest_spanning_star_nb(nbs, r.a_prime, StnbCandidate::S1);
    CHECK(r.candidate_lengths[0] == s1.length);
    CHECK(r.upper_bound == 2.0);
  }
  SUBCASE("counterexample n=10 eps=0.1") {
    const auto nbs = generate_neighborhoods({GenKind::diam_counterexample, 10, 4, 0.1, std::nullopt});
    const StnbReport r = solve_stnb(nbs);
    require_one_per_color(nbs, r.solution);
    CHECK(r.solution.length >= 0.524 * exact_stnb(nbs).length);
  }
  SUBCASE("five seeded singletons") {
    const auto pts = generate_points({GenKind::uniform_square, 5, 77, std::nullopt, std::nullopt});
    const auto nbs = singletons(pts);
    CHECK(solve_stnb(nbs).solution.length >= 0.524 * exact_stnb(nbs).length);
  }
  SUBCASE("monochromatic") {
    CHECK_THROWS_AS(NeighborhoodSet({{1, {{Point{0, 0}, Point{1, 0}}}}}), InputError);
  }
}

TEST_CASE("stnb properties on random instances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenSpec spec{GenKind::random_neighborhoods, 2 + seed % 5, seed, std::nullopt, 1 + seed % 4};
    const NeighborhoodSet nbs = generate_neighborhoods(spec);
    const StnbReport r = solve_stnb(nbs);
    require_one_per_color(nbs, r.solution);
    const auto [a, b] = r.diametral;
    const StnbSolution d = build_double_star(nbs, a, b);
    const double tol = 1e-12 * d.length;
    CHECK(d.length >= longest_spanning_star_nb(nbs, a).length - tol);
    CHECK(d.length >= longest_spanning_star_nb(nbs, b).length - tol);
    const auto reps = d.points(nbs);
    for (const Edge e : d.tree.edges) {
      if (e == Edge(nbs.owner(a), nbs.owner(b))) continue;
      CHECK(dist(reps[e.i], reps[e.j]) >= r.ab_len / 2 * (1 - 1e-12));
    }
    CHECK(r.solution.length >= 0.5 * r.upper_bound * (1 - 1e-12));
    const StnbSolution opt = exact_stnb(nbs);
    CHECK(r.solution.length >= 0.524 * opt.length);
    CHECK(r.solution.length <= opt.length * (1 + 1e-12));
  }
}

TEST_CASE("region classification") {
  const StnbParams p = stnb_params();
  CHECK(p.omega == doctest::Approx(0.8151892463321835).epsilon(1e-14));
  CHECK(std::abs(p.omega - 0.815) < 1e-3);
  CHECK(std::abs(std::sqrt(3.0) / 2 * (p.omega + 1) - 3 * p.delta) < 1e-12);
  CHECK(p.ellipse_sum == doctest::Approx(1.8631892463321835).epsilon(1e-14));

  const StnbVertexRegions q = classify_stnb_point({0.5, 0.8}, p);
  CHECK(q.in_L);
  CHECK_FALSE(q.in_E);
  CHECK(q.in_Q);
  CHECK(q.in_Lprime == false);

  const StnbVertexRegions mid = classify_stnb_point({0.5, 0}, p);
  CHECK(mid.in_Lprime);
  CHECK(mid.in_E);
  CHECK_FALSE(mid.in_Q);

  const StnbVertexRegions at_a = classify_stnb_point({0, 0}, p);
  CHECK_FALSE(at_a.in_Q);
  CHECK_FALSE(at_a.in_Lprime);
}

TEST_CASE("stnb_region_report") {
  const NeighborhoodSet nbs({{1, {{Point{0, 0}}}},
                             {2, {{Point{2, 0}}}},
                             {3, {{Point{1, 1.6}}}},
                             {4, {{Point{1, 0.1}, Point{1, -0.1}}}}});
  const StnbRegionReport r = stnb_region_report(nbs);
  CHECK(r.diametral == IndexPair{0, 1});
  CHECK(r.any_in_Q);
  CHECK(r.vertices[2].in_Q);
  CHECK(r.neighborhoods_inside_Lprime == 1);
  CHECK(r.aa_prime == 0.0);
}

TEST_CASE("Steiner helper lemma for sampled Q points") {
  const StnbParams p = stnb_params();
  Rng rng(23);
  int hits = 0;
  while (hits < 2000) {
    const Point q{rng.uniform(-0.1, 1.1), rng.uniform(-1, 1)};
    if (!classify_stnb_point(q, p).in_Q) continue;
    ++hits;
    CHECK(std::min(dist(q, {0, 0}), dist(q, {1, 0})) > p.omega);
    const Point s = fermat_point({0, 0}, {1, 0}, q).steiner_point;
    for (const Point x : {s, Point{rng.uniform(-1, 2), rng.uniform(-1, 1)}}) {
      CHECK(dist(x, {0, 0}) + dist(x, {1, 0}) + dist(x, q) > 3 * p.delta);
    }
  }
}

TEST_CASE("edges from L' into the Q-free region are capped by |lf|") {
  const StnbParams p = stnb_params();
  const double cap = lf_length(p.delta);
  CHECK(cap < 0.95);
  Rng rng(4);
  std::vector<Point> lens, rest;
  while (lens.size() < 400 || rest.size() < 400) {
    const Point x{rng.uniform(-0.1, 1.1), rng.uniform(-1, 1)};
    const StnbVertexRegions r = classify_stnb_point(x, p);
    if (r.in_Lprime && lens.size() < 400) lens.push_back(x);
    if ((r.in_L1 || r.in_L2) && !r.in_Q && rest.size() < 400) rest.push_back(x);
  }
  double worst = 0;
  for (const Point x : lens) {
    for (const Point y : rest) worst = std::max(worst, dist(x, y));
  }
  CHECK(worst <= cap * (1 + 1e-12));
  // Corner witnesses: l and f themselves.
  const Point l{0.5, -std::sqrt(p.delta * p.delta - 0.25)};
  const auto f = circle_circle_intersections({0, 0}, p.omega, {1, 0}, 2 * p.delta);
  REQUIRE(f.size() == 2);
  CHECK(dist(l, f[0]) == doctest::Approx(cap).epsilon(1e-12));
}

namespace {

// a = (0,0), b = (1,0) and a second vertex a' of X1 with |aa'| >= 2 delta;
// the other neighborhoods are singletons inside L ∩ D(a', 1).
NeighborhoodSet far_a_prime_instance(std::uint64_t seed) {
  Rng rng(seed);
  Point ap;
  do {
    ap = rng.in_disk({1, 0}, 1);
  } while (dist(ap, {0, 0}) < 1.05);
  std::vector<Neighborhood> nbs{{1, {{Point{0, 0}, ap}}}, {2, {{Point{1, 0}}}}};
  const std::size_t extra = 1 + rng.index(3);
  while (nbs.size() < 2 + extra) {
    const Point x = rng.in_disk({0.5, 0}, 1);
    if (dist(x, {0, 0}) < 1 && dist(x, {1, 0}) < 1 && dist(x, ap) < 1) {
      nbs.push_back({static_cast<ColorId>(nbs.size() + 1), {{x}}});
    }
  }
  return NeighborhoodSet(std::move(nbs));
}

}  // namespace

TEST_CASE("case lemmas against the upper bound and the oracle") {
  const StnbParams p = stnb_params();
  int large = 0, q_nonempty = 0, q_empty = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const NeighborhoodSet nbs =
        seed % 3 == 0 ? far_a_prime_instance(seed)
                      : generate_neighborhoods({GenKind::random_neighborhoods, 3 + seed % 3, 500 + seed,
                                                std::nullopt, 4});
    const StnbReport r = solve_stnb(nbs);
    const StnbRegionReport reg = stnb_region_report(nbs);
    const double bound = p.delta * r.upper_bound;
    const auto& len = r.candidate_lengths;  // S1 S2 S3 D
    if (reg.aa_prime >= 2 * p.delta || reg.bb_prime >= 2 * p.delta) {
      ++large;
      CHECK(std::max({len[0], len[1], len[3]}) >= bound);
    } else if (reg.any_in_Q) {
      ++q_nonempty;
      CHECK(std::max(len[2], len[3]) >= bound);
    } else {
      ++q_empty;
      CHECK(len[3] >= p.delta * exact_stnb(nbs).length);
    }
  }
  MESSAGE("cases: aa'/bb' large ", large, ", Q nonempty ", q_nonempty, ", Q empty ", q_empty);
  CHECK(large > 0);
  CHECK(q_nonempty > 0);
  CHECK(q_empty > 0);
}
