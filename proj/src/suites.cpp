#include "longtree/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "longtree/analysis.hpp"
#include "longtree/instances.hpp"
#include "longtree/ncst.hpp"
#include "longtree/oracles.hpp"
#include "longtree/report.hpp"
#include "longtree/stnb.hpp"

namespace longtree {

namespace {

constexpr std::array<GenKind, 3> kPointKinds{GenKind::uniform_square, GenKind::uniform_disk, GenKind::two_cluster};

std::string describe(const GenSpec& spec) {
  return std::string(to_string(spec.kind)) + " n=" + std::to_string(spec.n) + " seed=" + std::to_string(spec.seed);
}

void note_ratio(RatioSummary& s, double ratio, const GenSpec& spec) {
  if (s.instances == 0 || ratio < s.min_ratio) {
    s.min_ratio = ratio;
    s.worst = describe(spec);
  }
  s.mean_ratio += ratio;
  ++s.instances;
}

void finish(RatioSummary& s) {
  if (s.instances > 0) s.mean_ratio /= static_cast<double>(s.instances);
}

struct Tally {
  PropertySummary summary;

  explicit Tally(std::string name) { summary.name = std::move(name); }

  // slack >= -tol counts as satisfied
  void add(double slack, double tol) {
    if (summary.samples == 0 || slack < summary.min_margin) summary.min_margin = slack;
    ++summary.samples;
    if (slack < -tol) ++summary.violations;
  }
};

double strict_tol(double scale) { return kMetricTolerance * std::max(1.0, scale); }

}  // namespace

RatioSummary ncst_ratio_suite(std::uint64_t seed, std::size_t count) {
  RatioSummary s;
  for (std::size_t k = 0; k < count; ++k) {
    GenSpec spec;
    spec.kind = kPointKinds[k % kPointKinds.size()];
    spec.n = 5 + (k / kPointKinds.size()) % 4;
    spec.seed = seed + k;
    const auto pts = generate_points(spec);
    const NcstReport rep = solve_ncst(pts);
    const Tree opt = exact_ncst_parallel(pts, 8);
    if (validate_spanning_tree(rep.best.tree, pts) || !is_noncrossing(rep.best.tree, pts).noncrossing) {
      ++s.invalid_outputs;
    }
    note_ratio(s, tree_length(rep.best.tree, pts) / tree_length(opt, pts), spec);
  }
  finish(s);
  return s;
}

RatioSummary stnb_ratio_suite(std::uint64_t seed, std::size_t count) {
  RatioSummary s;
  for (std::size_t k = 0; k < count; ++k) {
    GenSpec spec;
    spec.kind = GenKind::random_neighborhoods;
    spec.n = 3 + k % 3;
    spec.seed = seed + k;
    spec.vertices_per_nb = 4;
    const NeighborhoodSet nbs = generate_neighborhoods(spec);
    const StnbReport rep = solve_stnb(nbs);
    const StnbSolution opt = exact_stnb(nbs, 10'000);
    if (!check_tree(stnb_record(nbs, rep), nullptr, &nbs).ok()) ++s.invalid_outputs;
    note_ratio(s, rep.solution.length / opt.length, spec);
  }
  finish(s);
  return s;
}

std::vector<PropertySummary> lemma_suite(std::uint64_t seed, const LemmaSuiteSizes& sizes) {
  Tally dominance("double_star_dominance");
  Tally floor("double_star_edge_floor");
  for (std::size_t k = 0; k < sizes.double_star_instances; ++k) {
    GenSpec spec;
    spec.kind = GenKind::random_neighborhoods;
    spec.n = 3 + k % 8;
    spec.seed = seed + k;
    const NeighborhoodSet nbs = generate_neighborhoods(spec);
    const auto [a, b] = bichromatic_diametral_pair(nbs.points(), nbs.colors());
    const StnbSolution d = build_double_star(nbs, a, b);
    const double sa = longest_spanning_star_nb(nbs, a).length;
    const double sb = longest_spanning_star_nb(nbs, b).length;
    dominance.add(d.length - std::max(sa, sb), strict_tol(d.length));
    const double ab = dist(nbs.point(a), nbs.point(b));
    const Edge ab_edge(nbs.owner(a), nbs.owner(b));
    const auto reps = d.points(nbs);
    for (const Edge e : d.tree.edges) {
      if (e == ab_edge) continue;
      floor.add(dist(reps[e.i], reps[e.j]) - ab / 2.0, strict_tol(ab));
    }
  }

  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Tally two_star("two_star");
  for (std::size_t k = 0; k < sizes.two_star_pairs; ++k) {
    GenSpec spec;
    spec.kind = kPointKinds[k % kPointKinds.size()];
    spec.n = 2 + rng.index(29);
    spec.seed = seed + k;
    const auto pts = generate_points(spec);
    const std::size_t p = rng.index(pts.size());
    std::size_t q = rng.index(pts.size() - 1);
    if (q >= p) ++q;
    const double best = std::max(star_length(pts, p), star_length(pts, q));
    const double need = static_cast<double>(pts.size()) / 2.0 * dist(pts[p], pts[q]);
    two_star.add(best - need, strict_tol(need));
  }

  auto steiner_margin = [&](Point a, Point b, Point q) {
    const Point far{rng.uniform(-1.0, 2.0), rng.uniform(-1.5, 1.5)};
    const Point fermat = fermat_point(a, b, q).steiner_point;
    auto total = [&](Point p) { return dist(p, a) + dist(p, b) + dist(p, q); };
    return std::min(total(far), total(fermat));
  };

  Tally steiner_stnb("steiner_stnb");
  {
    const StnbParams params = stnb_params();
    const Point a{0.0, 0.0}, b{1.0, 0.0};
    while (steiner_stnb.summary.samples < sizes.steiner_samples) {
      const Point q{rng.uniform(-0.1, 1.1), rng.uniform(-1.0, 1.0)};
      if (!classify_stnb_point(q, params).in_Q) continue;
      steiner_stnb.add(steiner_margin(a, b, q) - 3.0 * params.delta, 0.0);
    }
  }

  Tally steiner_ncst("steiner_ncst");
  {
    const double d = ncst_params(1.0).d;
    while (steiner_ncst.summary.samples < sizes.steiner_samples) {
      const double ab = rng.uniform(d, 1.0);
      const RegionClassifier rc(ab);
      const Point a{0.0, 0.0}, b{ab, 0.0};
      for (int tries = 0; tries < 1000; ++tries) {
        const Point q{rng.uniform(ab - 1.0, 1.0), rng.uniform(-1.0, 1.0)};
        if (!rc.label(q).in_Q) continue;
        steiner_ncst.add(steiner_margin(a, b, q) - 3.0 * rc.params().delta, 0.0);
        break;
      }
    }
  }

  Tally fermat_lower("fermat_lower");
  Tally fermat_upper("fermat_upper");
  for (std::size_t k = 0; k < sizes.fermat_triples; ++k) {
    std::array<Point, 3> t;
    for (Point& p : t) p = {rng.uniform(), rng.uniform()};
    const double mst = tree_length(min_spanning_tree(t), t);
    const double smt = fermat_point(t[0], t[1], t[2]).smt_length;
    fermat_lower.add(smt - std::sqrt(3.0) / 2.0 * mst, strict_tol(mst));
    fermat_upper.add(mst - smt, strict_tol(mst));
  }

  return {dominance.summary,    floor.summary,        two_star.summary,    steiner_stnb.summary,
          steiner_ncst.summary, fermat_lower.summary, fermat_upper.summary};
}

AdversarialSummary adversarial_suite(std::uint64_t seed, std::size_t n) {
  AdversarialSummary s;
  {
    GenSpec spec{GenKind::two_cluster, n, seed, 1e-6, std::nullopt};
    const auto pts = generate_points(spec);
    s.two_cluster_n = n;
    s.two_cluster_ratio = best_star(pts).length / tree_length(max_spanning_tree(pts), pts);
  }
  {
    GenSpec spec{GenKind::diam_counterexample, n, seed, 1.0 / static_cast<double>(n), std::nullopt};
    const NeighborhoodSet nbs = generate_neighborhoods(spec);
    s.diam_n = n;
    s.diam_epsilon = *spec.epsilon;
    s.diam_forced_length = exact_stnb_with_edge(nbs, nbs.begin(0), nbs.begin(1)).length;
    s.diam_optimum = exact_stnb(nbs).length;
    s.diam_ratio = s.diam_forced_length / s.diam_optimum;
    s.diam_bound = static_cast<double>(n + 1) / static_cast<double>(2 * n - 6);
  }
  return s;
}

OracleConsistency oracle_consistency_suite(std::uint64_t seed, std::size_t per_n, std::size_t max_n) {
  OracleConsistency s;
  std::vector<std::vector<Point>> cases;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t k = 0; k < per_n; ++k) {
      GenSpec spec;
      spec.kind = kPointKinds[k % kPointKinds.size()];
      spec.n = n;
      spec.seed = seed + 1000 * n + k;
      cases.push_back(generate_points(spec));
    }
  }
  // Many equal lengths and collinear triples.
  cases.push_back({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  cases.push_back({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}});
  cases.push_back({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  for (const auto& pts : cases) {
    if (pts.size() > max_n) continue;
    const Tree pruned = exact_ncst(pts, max_n);
    const Tree parallel = exact_ncst_parallel(pts, max_n);
    const Tree full = enumerate_ncst(pts);
    ++s.ncst_instances;
    if (pruned.sorted_edges() != full.sorted_edges() || parallel.sorted_edges() != full.sorted_edges()) {
      ++s.ncst_mismatches;
    }

    std::vector<Neighborhood> singles;
    for (std::size_t i = 0; i < pts.size(); ++i) singles.push_back({static_cast<ColorId>(i + 1), {{pts[i]}}});
    if (singles.size() < 2) continue;
    const NeighborhoodSet nbs(std::move(singles));
    const StnbSolution opt = exact_stnb(nbs);
    const Tree mst = max_spanning_tree(pts);
    ++s.stnb_instances;
    if (opt.tree.sorted_edges() != mst.sorted_edges() || opt.length != tree_length(mst, pts)) ++s.stnb_mismatches;
  }
  return s;
}

Json to_json(const RatioSummary& s) {
  Json j;
  j["instances"] = s.instances;
  j["invalid_outputs"] = s.invalid_outputs;
  j["min_ratio"] = s.min_ratio;
  j["mean_ratio"] = s.mean_ratio;
  j["worst"] = s.worst;
  return j;
}

Json to_json(const PropertySummary& s) {
  Json j;
  j["name"] = s.name;
  j["samples"] = s.samples;
  j["violations"] = s.violations;
  j["min_margin"] = s.min_margin;
  return j;
}

Json to_json(const AdversarialSummary& s) {
  Json j;
  j["two_cluster_n"] = s.two_cluster_n;
  j["two_cluster_ratio"] = s.two_cluster_ratio;
  j["diam_n"] = s.diam_n;
  j["diam_epsilon"] = s.diam_epsilon;
  j["diam_forced_length"] = s.diam_forced_length;
  j["diam_optimum"] = s.diam_optimum;
  j["diam_ratio"] = s.diam_ratio;
  j["diam_bound"] = s.diam_bound;
  return j;
}

Json paper_constants_report() {
  const ConstantsReport c = identity_suite(50);
  Json j;
  j["suite"] = "paper-constants";
  j["lf_length"] = c.lf_len;
  j["omega_stnb"] = c.omega_stnb;
  j["f1_at_d"] = c.f1_at_d;
  j["star_bound_margin"] = c.star_bound_margin;
  j["max_abs_residual"] = c.max_abs_residual();
  Json residuals;
  for (const auto& [name, value] : c.identity_residuals) residuals[name] = value;
  j["identity_residuals"] = residuals;
  Json f1s = Json::array(), f2s = Json::array();
  for (const auto& [ab, v] : c.f1_at) f1s.push_back({ab, v});
  for (const auto& [ab, v] : c.f2_at) f2s.push_back({ab, v});
  j["f1_samples"] = f1s;
  j["f2_samples"] = f2s;
  return j;
}

Json ratios_report(std::uint64_t seed, std::size_t count) {
  Json j;
  j["suite"] = "ratios";
  j["seed"] = seed;
  j["ncst"] = to_json(ncst_ratio_suite(seed, count));
  j["stnb"] = to_json(stnb_ratio_suite(seed, count));
  return j;
}

Json lemmas_report(std::uint64_t seed) {
  Json j;
  j["suite"] = "lemmas";
  j["seed"] = seed;
  j["properties"] = Json::array();
  for (const auto& p : lemma_suite(seed)) j["properties"].push_back(to_json(p));
  j["adversarial"] = to_json(adversarial_suite(seed));
  return j;
}

}  // namespace longtree
