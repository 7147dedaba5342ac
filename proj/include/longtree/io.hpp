#pragma once

// On-disk formats. Points and neighborhoods are whitespace-separated text
// with '#' comments; trees and reports are JSON with "format": 1. Numbers
// are written in shortest round-trip form, so write -> read is bit-exact.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "longtree/geom.hpp"
#include "longtree/neighborhoods.hpp"
#include "longtree/trees.hpp"

namespace longtree {

using Json = nlohmann::ordered_json;

inline constexpr int kTreeFormatVersion = 1;

[[nodiscard]] std::string format_double(double v);

/// Parse failures throw InputError("line N: ...").
[[nodiscard]] std::vector<Point> parse_points(std::istream& in);
[[nodiscard]] std::vector<Point> read_points(const std::filesystem::path& path);
void write_points(std::ostream& out, std::span<const Point> pts);
void write_points(const std::filesystem::path& path, std::span<const Point> pts);

[[nodiscard]] NeighborhoodSet parse_neighborhoods(std::istream& in);
[[nodiscard]] NeighborhoodSet read_neighborhoods(const std::filesystem::path& path);
void write_neighborhoods(std::ostream& out, const NeighborhoodSet& nbs);
void write_neighborhoods(const std::filesystem::path& path, const NeighborhoodSet& nbs);

struct Representative {
  ColorId color = 0;
  std::size_t vertex = 0;  // flattened index into the neighborhood file
};

/// Tree file contents. Vertex i of the tree is points[i]; for neighborhood
/// trees representatives[i] names its source vertex.
struct TreeRecord {
  std::string algorithm;
  std::string candidate;
  std::vector<Point> points;
  std::vector<Edge> edges;
  double length = 0.0;
  std::optional<IndexPair> guess;
  std::optional<std::vector<Representative>> representatives;
  std::optional<Json> metrics;

  [[nodiscard]] Tree tree() const { return Tree(points.size(), edges); }
};

[[nodiscard]] Json to_json(const TreeRecord& rec);

/// Throws InputError on schema violations, including "edge out of range".
[[nodiscard]] TreeRecord tree_from_json(const Json& j);

[[nodiscard]] TreeRecord read_tree(const std::filesystem::path& path);
void write_tree(std::ostream& out, const TreeRecord& rec);
void write_tree(const std::filesystem::path& path, const TreeRecord& rec);

void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace longtree
