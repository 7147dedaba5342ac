// longtree command-line driver.
//
// Exit codes: 0 success, 1 usage error, 2 instance or guard error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "longtree/error.hpp"
#include "longtree/instances.hpp"
#include "longtree/io.hpp"
#include "longtree/ncst.hpp"
#include "longtree/oracles.hpp"
#include "longtree/report.hpp"
#include "longtree/stnb.hpp"
#include "longtree/suites.hpp"
#include "longtree/svg.hpp"

namespace lt = longtree;

namespace {

constexpr int kExitInstance = 2;

void write_svg(const std::string& path, std::span<const lt::Point> pts, const lt::Tree& t,
               const lt::SvgOptions& opts) {
  std::ofstream out(path);
  if (!out) throw lt::InputError("cannot write " + path);
  lt::render_svg(out, pts, t, opts);
}

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
  std::optional<std::size_t> vertices_per_nb;
  std::string out;
};

int run_gen(const GenArgs& a) {
  lt::GenSpec spec;
  spec.kind = lt::parse_gen_kind(a.kind);
  spec.n = a.n;
  spec.seed = a.seed;
  spec.epsilon = a.epsilon;
  spec.vertices_per_nb = a.vertices_per_nb;
  const lt::Instance inst = lt::generate(spec);
  if (const auto* pts = std::get_if<std::vector<lt::Point>>(&inst)) {
    lt::write_points(a.out, *pts);
  } else {
    lt::write_neighborhoods(a.out, std::get<lt::NeighborhoodSet>(inst));
  }
  return 0;
}

struct SolveArgs {
  std::string in;
  std::string out;
  std::string svg;
  bool svg_regions = false;
  bool no_prune = false;
  std::string report;
};

int run_ncst(const SolveArgs& a) {
  const auto pts = lt::read_points(a.in);
  lt::NcstOptions opts;
  opts.prune = !a.no_prune;
  const lt::NcstReport rep = lt::solve_ncst(pts, opts);
  lt::TreeRecord rec = lt::ncst_record(pts, rep);
  if (!a.report.empty()) lt::write_tree(a.report, rec);
  rec.metrics.reset();
  lt::write_tree(a.out, rec);
  if (!a.svg.empty()) {
    lt::SvgOptions so;
    if (a.svg_regions) {
      so.regions = lt::RegionFamily::ncst;
      const auto [ia, ib] = rep.best.guess.value_or(rep.diametral);
      so.region_pair = std::pair{pts[ia], pts[ib]};
      so.region_unit = rep.diameter;
    }
    write_svg(a.svg, pts, rep.best.tree, so);
  }
  std::cout << "ncst " << rep.best.label() << " length " << lt::format_double(rep.best.length) << '\n';
  return 0;
}

int run_stnb(const SolveArgs& a) {
  const lt::NeighborhoodSet nbs = lt::read_neighborhoods(a.in);
  const lt::StnbReport rep = lt::solve_stnb(nbs);
  lt::TreeRecord rec = lt::stnb_record(nbs, rep);
  if (!a.report.empty()) lt::write_tree(a.report, rec);
  rec.metrics.reset();
  lt::write_tree(a.out, rec);
  if (!a.svg.empty()) {
    lt::SvgOptions so;
    so.neighborhoods = &nbs;
    if (a.svg_regions) {
      so.regions = lt::RegionFamily::stnb;
      so.region_pair = std::pair{nbs.point(rep.diametral.first), nbs.point(rep.diametral.second)};
      so.region_unit = rep.ab_len;
    }
    write_svg(a.svg, rep.solution.points(nbs), rep.solution.tree, so);
  }
  std::cout << "stnb " << lt::to_string(rep.solution.candidate) << " length "
            << lt::format_double(rep.solution.length) << '\n';
  return 0;
}

struct OracleArgs {
  std::string in;
  std::string out;
  std::optional<std::size_t> max_n;
  std::size_t max_assignments = lt::kDefaultStnbOracleMaxAssignments;
};

int run_oracle_ncst(const OracleArgs& a) {
  const auto pts = lt::read_points(a.in);
  const lt::Tree t = lt::exact_ncst_parallel(pts, a.max_n.value_or(lt::kDefaultNcstOracleMaxN));
  const lt::TreeRecord rec = lt::plain_record(pts, t, "oracle-ncst", "exact");
  lt::write_tree(a.out, rec);
  std::cout << "oracle ncst length " << lt::format_double(rec.length) << '\n';
  return 0;
}

int run_oracle_stnb(const OracleArgs& a) {
  const lt::NeighborhoodSet nbs = lt::read_neighborhoods(a.in);
  if (a.max_n && nbs.size() > *a.max_n) throw lt::GuardError();
  const lt::StnbSolution sol = lt::exact_stnb_parallel(nbs, a.max_assignments);
  const lt::TreeRecord rec = lt::stnb_solution_record(nbs, sol, "oracle-stnb");
  lt::write_tree(a.out, rec);
  std::cout << "oracle stnb length " << lt::format_double(rec.length) << '\n';
  return 0;
}

struct CheckArgs {
  std::string tree;
  std::string points;
  std::string nbs;
};

int run_check(const CheckArgs& a) {
  const lt::TreeRecord rec = lt::read_tree(a.tree);
  std::optional<std::vector<lt::Point>> pts;
  std::optional<lt::NeighborhoodSet> nbs;
  if (!a.points.empty()) pts = lt::read_points(a.points);
  if (!a.nbs.empty()) nbs = lt::read_neighborhoods(a.nbs);
  const lt::CheckOutcome res = lt::check_tree(rec, pts ? &*pts : nullptr, nbs ? &*nbs : nullptr);
  if (res.ok()) {
    std::cout << "ok: spanning tree on " << rec.points.size() << " vertices"
              << (res.noncrossing ? ", noncrossing" : ", crossing") << '\n';
    return 0;
  }
  for (const auto& p : res.problems) std::cout << "invalid: " << p << '\n';
  return kExitInstance;
}

int run_ratio(const std::string& approx_path, const std::string& oracle_path) {
  const lt::TreeRecord approx = lt::read_tree(approx_path);
  const lt::TreeRecord oracle = lt::read_tree(oracle_path);
  for (const auto* rec : {&approx, &oracle}) {
    if (auto err = lt::validate_spanning_tree(rec->tree(), rec->points)) throw lt::InputError(*err);
  }
  if (approx.points.size() != oracle.points.size()) throw lt::InputError("trees have different vertex counts");
  const double num = lt::tree_length(approx.tree(), approx.points);
  const double den = lt::tree_length(oracle.tree(), oracle.points);
  if (!(den > 0.0)) throw lt::InputError("oracle tree has zero length");
  std::printf("%.6f\n", num / den);
  return 0;
}

struct BenchArgs {
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  lt::Json report;
  if (a.suite == "paper-constants") {
    report = lt::paper_constants_report();
  } else if (a.suite == "ratios") {
    report = lt::ratios_report(a.seed, a.count);
  } else {
    report = lt::lemmas_report(a.seed);
  }
  report["format"] = lt::kTreeFormatVersion;
  lt::write_json(a.out, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long spanning trees: approximations, exact oracles and benchmarks"};
  app.require_subcommand(1);
  std::function<int()> action;

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a seeded instance");
  g->add_option("--kind", gen.kind, "uniform_square|uniform_disk|two_cluster|diam_counterexample|random_neighborhoods")
      ->required();
  g->add_option("--n", gen.n, "Point or neighborhood count")->required();
  g->add_option("--seed", gen.seed, "Generator seed")->required();
  g->add_option("--epsilon", gen.epsilon, "Cluster radius (two_cluster, diam_counterexample)");
  g->add_option("--vertices-per-nb", gen.vertices_per_nb, "Maximum vertices per neighborhood");
  g->add_option("--out", gen.out, "Output file")->required();
  g->callback([&] { action = [&] { return run_gen(gen); }; });

  SolveArgs ncst;
  auto* n = app.add_subcommand("ncst", "Approximate longest noncrossing spanning tree");
  n->add_option("--points", ncst.in, "Point file")->required();
  n->add_option("--out", ncst.out, "Tree file")->required();
  n->add_option("--svg", ncst.svg, "SVG drawing");
  n->add_flag("--svg-regions", ncst.svg_regions, "Overlay L, E1, E2 and Q for the winning guess");
  n->add_flag("--no-prune", ncst.no_prune, "Try every guess pair");
  n->add_option("--report", ncst.report, "Report file (tree plus metrics)");
  n->callback([&] { action = [&] { return run_ncst(ncst); }; });

  SolveArgs stnb;
  auto* s = app.add_subcommand("stnb", "Approximate longest spanning tree with neighborhoods");
  s->add_option("--nbs", stnb.in, "Neighborhood file")->required();
  s->add_option("--out", stnb.out, "Tree file")->required();
  s->add_option("--svg", stnb.svg, "SVG drawing");
  s->add_flag("--svg-regions", stnb.svg_regions, "Overlay L, E and Q for the bichromatic diameter");
  s->add_option("--report", stnb.report, "Report file (tree plus metrics)");
  s->callback([&] { action = [&] { return run_stnb(stnb); }; });

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact solvers for small instances");
  o->require_subcommand(1);
  for (const char* which : {"ncst", "stnb"}) {
    auto* sub = o->add_subcommand(which, std::string("Exact ") + which);
    sub->add_option("--in", oracle.in, "Instance file")->required();
    sub->add_option("--out", oracle.out, "Tree file")->required();
    sub->add_option("--max-n", oracle.max_n, "Size guard on points or neighborhoods");
    if (std::string(which) == "stnb") {
      sub->add_option("--max-assignments", oracle.max_assignments, "Guard on representative assignments");
      sub->callback([&] { action = [&] { return run_oracle_stnb(oracle); }; });
    } else {
      sub->callback([&] { action = [&] { return run_oracle_ncst(oracle); }; });
    }
  }

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Validate a tree file");
  c->add_option("--tree", check.tree, "Tree file")->required();
  c->add_option("--points", check.points, "Point file the tree must span without crossings");
  c->add_option("--nbs", check.nbs, "Neighborhood file the representatives must match");
  c->callback([&] { action = [&] { return run_check(check); }; });

  std::string approx_path, oracle_path;
  auto* r = app.add_subcommand("ratio", "Print approx length / oracle length");
  r->add_option("--approx", approx_path, "Approximate tree")->required();
  r->add_option("--oracle", oracle_path, "Oracle tree")->required();
  r->callback([&] { action = [&] { return run_ratio(approx_path, oracle_path); }; });

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a measurement suite");
  b->add_option("--suite", bench.suite, "paper-constants|ratios|lemmas")
      ->required()
      ->check(CLI::IsMember({"paper-constants", "ratios", "lemmas"}));
  b->add_option("--seed", bench.seed, "Base seed");
  b->add_option("--count", bench.count, "Instances per ratio suite");
  b->add_option("--out", bench.out, "Report file")->required();
  b->callback([&] { action = [&] { return run_bench(bench); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const lt::GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const lt::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInstance;
}
