#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "longtree/geom.hpp"

namespace longtree {

/// Undirected edge stored as (min, max).
struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;

  Edge() = default;
  Edge(std::size_t u, std::size_t v) : i(u < v ? u : v), j(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Spanning tree over vertices 0..n-1 of some point array.
struct Tree {
  std::size_t n = 0;
  std::vector<Edge> edges;

  Tree() = default;
  explicit Tree(std::size_t vertex_count) : n(vertex_count) {}
  Tree(std::size_t vertex_count, std::vector<Edge> e) : n(vertex_count), edges(std::move(e)) {}

  void add_edge(std::size_t u, std::size_t v) { edges.emplace_back(u, v); }

  /// Edge list sorted; the canonical form used for tie-breaks and equality.
  [[nodiscard]] std::vector<Edge> sorted_edges() const;
};

/// Sum of Euclidean edge lengths. Throws std::out_of_range on a bad index.
[[nodiscard]] double tree_length(const Tree& t, std::span<const Point> pts);

/// First violation found, or nullopt when t is a spanning tree of pts.
[[nodiscard]] std::optional<std::string> validate_spanning_tree(const Tree& t,
                                                                std::span<const Point> pts);

struct CrossingCheck {
  bool noncrossing = true;
  std::optional<std::pair<Edge, Edge>> first_crossing;
};

/// Quadratic scan with segments_cross. A zero-length edge is reported as
/// crossing itself.
[[nodiscard]] CrossingCheck is_noncrossing(const Tree& t, std::span<const Point> pts);

[[nodiscard]] Tree min_spanning_tree(std::span<const Point> pts);
[[nodiscard]] Tree max_spanning_tree(std::span<const Point> pts);

/// Maximum spanning tree among those containing edge (u, v).
[[nodiscard]] Tree max_spanning_tree_with_edge(std::span<const Point> pts, std::size_t u,
                                               std::size_t v);

[[nodiscard]] Tree star(std::span<const Point> pts, std::size_t center);

/// Total distance from pts[center] to every point.
[[nodiscard]] double star_length(std::span<const Point> pts, std::size_t center);

struct BestStar {
  Tree tree;
  std::size_t center = 0;
  double length = 0.0;
};

/// Longest star over all centers; ties go to the smallest center.
[[nodiscard]] BestStar best_star(std::span<const Point> pts);

struct Fermat3Result {
  Point steiner_point;
  double smt_length = 0.0;
  std::optional<std::size_t> degenerate_at_vertex;
};

/// Steiner minimal tree of three terminals.
[[nodiscard]] Fermat3Result fermat_point(Point a, Point b, Point c);

}  // namespace longtree
