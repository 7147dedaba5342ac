#pragma once

// Seeded instance generators. The stream is std::mt19937_64 seeded with
// GenSpec::seed; every real draw is (next() >> 11) * 2^-53 in [0, 1), so the
// bytes are reproducible in any language with an MT19937-64 implementation.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "longtree/geom.hpp"
#include "longtree/neighborhoods.hpp"

namespace longtree {

enum class GenKind { uniform_square, uniform_disk, two_cluster, diam_counterexample, random_neighborhoods };

[[nodiscard]] std::string_view to_string(GenKind kind);

/// Throws InputError for an unknown name.
[[nodiscard]] GenKind parse_gen_kind(std::string_view name);

struct GenSpec {
  GenKind kind = GenKind::uniform_square;
  std::size_t n = 2;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
  std::optional<std::size_t> vertices_per_nb;
};

/// Throws InputError when n < 2, epsilon is outside (0, 0.5), or
/// vertices_per_nb is zero.
void validate(const GenSpec& spec);

using Instance = std::variant<std::vector<Point>, NeighborhoodSet>;

/// Point kinds yield a point list; diam_counterexample and
/// random_neighborhoods yield neighborhoods with colors 1..n.
[[nodiscard]] Instance generate(const GenSpec& spec);

[[nodiscard]] std::vector<Point> generate_points(const GenSpec& spec);
[[nodiscard]] NeighborhoodSet generate_neighborhoods(const GenSpec& spec);

/// The epsilon actually used: the spec value or the per-kind default
/// (1e-6 for two_cluster, 1/max(n,3) for diam_counterexample).
[[nodiscard]] double effective_epsilon(const GenSpec& spec);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform in [0, k).
  std::size_t index(std::size_t k);
  /// Uniform in the open disk of radius r around c, by rejection.
  Point in_disk(Point c, double r);

 private:
  std::mt19937_64 engine_;
};

}  // namespace longtree
