#include "longtree/instances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "longtree/error.hpp"

namespace longtree {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::index(std::size_t k) {
  return std::min(k - 1, static_cast<std::size_t>(uniform() * static_cast<double>(k)));
}

Point Rng::in_disk(Point c, double r) {
  while (true) {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    if (x * x + y * y < 1.0) return {c.x + r * x, c.y + r * y};
  }
}

namespace {

constexpr std::array<std::pair<GenKind, std::string_view>, 5> kKindNames{{
    {GenKind::uniform_square, "uniform_square"},
    {GenKind::uniform_disk, "uniform_disk"},
    {GenKind::two_cluster, "two_cluster"},
    {GenKind::diam_counterexample, "diam_counterexample"},
    {GenKind::random_neighborhoods, "random_neighborhoods"},
}};

bool yields_points(GenKind k) {
  return k == GenKind::uniform_square || k == GenKind::uniform_disk || k == GenKind::two_cluster;
}

// Star-shaped polygon: sorted angles, radii in [r/2, r].
Polygon star_shaped(Rng& rng, Point c, double r, std::size_t k) {
  std::vector<double> angles(k);
  for (double& t : angles) t = rng.uniform(0.0, 2.0 * std::numbers::pi);
  std::sort(angles.begin(), angles.end());
  Polygon poly;
  for (const double t : angles) {
    const double rho = rng.uniform(0.5 * r, r);
    poly.push_back({c.x + rho * std::cos(t), c.y + rho * std::sin(t)});
  }
  return poly;
}

}  // namespace

std::string_view to_string(GenKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

GenKind parse_gen_kind(std::string_view name) {
  for (const auto& [k, s] : kKindNames) {
    if (s == name) return k;
  }
  throw InputError("unknown generator kind: " + std::string(name));
}

void validate(const GenSpec& spec) {
  if (spec.n < 2) throw InputError("n must be at least 2");
  if (spec.epsilon && !(*spec.epsilon > 0.0 && *spec.epsilon < 0.5)) {
    throw InputError("epsilon must lie in (0, 0.5)");
  }
  if (spec.vertices_per_nb && *spec.vertices_per_nb == 0) {
    throw InputError("vertices_per_nb must be positive");
  }
}

double effective_epsilon(const GenSpec& spec) {
  if (spec.epsilon) return *spec.epsilon;
  if (spec.kind == GenKind::diam_counterexample) {
    return 1.0 / static_cast<double>(std::max<std::size_t>(spec.n, 3));
  }
  return 1e-6;
}

std::vector<Point> generate_points(const GenSpec& spec) {
  validate(spec);
  if (!yields_points(spec.kind)) throw InputError("generator kind yields neighborhoods");
  Rng rng(spec.seed);
  std::vector<Point> pts;
  pts.reserve(spec.n);
  switch (spec.kind) {
    case GenKind::uniform_square:
      for (std::size_t i = 0; i < spec.n; ++i) {
        const double x = rng.uniform();
        pts.push_back({x, rng.uniform()});
      }
      break;
    case GenKind::uniform_disk:
      for (std::size_t i = 0; i < spec.n; ++i) pts.push_back(rng.in_disk({0.0, 0.0}, 1.0));
      break;
    case GenKind::two_cluster: {
      const double eps = effective_epsilon(spec);
      for (std::size_t i = 0; i < spec.n; ++i) {
        pts.push_back(rng.in_disk(i < spec.n / 2 ? Point{0.0, 0.0} : Point{1.0, 0.0}, eps));
      }
      break;
    }
    default:
      break;
  }
  return pts;
}

NeighborhoodSet generate_neighborhoods(const GenSpec& spec) {
  validate(spec);
  if (yields_points(spec.kind)) throw InputError("generator kind yields points");
  Rng rng(spec.seed);
  std::vector<Neighborhood> nbs;
  nbs.reserve(spec.n);
  if (spec.kind == GenKind::diam_counterexample) {
    const double eps = effective_epsilon(spec);
    nbs.push_back({1, {{Point{0.0, 0.0}}, {Point{3.0 - 2.0 * eps, 0.0}}}});
    nbs.push_back({2, {{Point{2.0, 0.0}}}});
    for (std::size_t i = 2; i < spec.n; ++i) {
      nbs.push_back({static_cast<ColorId>(i + 1), {{rng.in_disk({1.0, 0.0}, eps)}}});
    }
    return NeighborhoodSet(std::move(nbs));
  }
  const std::size_t vpn = spec.vertices_per_nb.value_or(4);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const Point c{rng.uniform(), rng.uniform()};
    const double r = rng.uniform(0.02, 0.2);
    const std::size_t k = 1 + rng.index(vpn);
    nbs.push_back({static_cast<ColorId>(i + 1), {star_shaped(rng, c, r, k)}});
  }
  return NeighborhoodSet(std::move(nbs));
}

Instance generate(const GenSpec& spec) {
  if (yields_points(spec.kind)) return generate_points(spec);
  return generate_neighborhoods(spec);
}

}  // namespace longtree
