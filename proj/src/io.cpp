#include "longtree/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "longtree/error.hpp"

namespace longtree {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

// Non-comment lines split into tokens, with 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      std::istringstream ss(raw);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(std::move(t));
      if (!tokens.empty()) return true;
    }
    ++line_;
    return false;
  }

  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

double parse_real(const std::string& s, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) fail_at(line, "bad number '" + s + "'");
  if (!is_finite(Point{v, 0.0})) fail_at(line, "non-finite coordinate");
  return v;
}

template <class Int>
Int parse_int(const std::string& s, std::size_t line) {
  Int v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) fail_at(line, "bad integer '" + s + "'");
  return v;
}

Point parse_xy(const std::vector<std::string>& tok, std::size_t line) {
  if (tok.size() != 2) fail_at(line, "expected \"x y\"");
  const double x = parse_real(tok[0], line);
  return {x, parse_real(tok[1], line)};
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

}  // namespace

std::vector<Point> parse_points(std::istream& in) {
  LineReader reader(in);
  std::vector<Point> pts;
  for (std::vector<std::string> tok; reader.next(tok);) pts.push_back(parse_xy(tok, reader.line()));
  return pts;
}

std::vector<Point> read_points(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_points(in);
}

void write_points(std::ostream& out, std::span<const Point> pts) {
  for (const Point p : pts) out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
}

void write_points(const std::filesystem::path& path, std::span<const Point> pts) {
  auto out = open_out(path);
  write_points(out, pts);
}

NeighborhoodSet parse_neighborhoods(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  auto expect = [&](std::string_view keyword, std::size_t arity) {
    if (!reader.next(tok)) fail_at(reader.line(), "unexpected end of file, expected '" + std::string(keyword) + "'");
    if (tok[0] != keyword || tok.size() != arity + 1) {
      fail_at(reader.line(), "expected '" + std::string(keyword) + "' with " + std::to_string(arity) + " field(s)");
    }
  };
  expect("nbs", 1);
  const auto n = parse_int<std::size_t>(tok[1], reader.line());
  std::vector<Neighborhood> nbs;
  std::vector<ColorId> seen;
  for (std::size_t i = 0; i < n; ++i) {
    expect("nb", 2);
    Neighborhood nb;
    nb.color = parse_int<ColorId>(tok[1], reader.line());
    for (const ColorId c : seen) {
      if (c == nb.color) fail_at(reader.line(), "duplicate color");
    }
    seen.push_back(nb.color);
    const auto polys = parse_int<std::size_t>(tok[2], reader.line());
    if (polys == 0) fail_at(reader.line(), "neighborhood without polygons");
    for (std::size_t p = 0; p < polys; ++p) {
      expect("poly", 1);
      const auto k = parse_int<std::size_t>(tok[1], reader.line());
      if (k == 0) fail_at(reader.line(), "empty polygon");
      Polygon poly;
      for (std::size_t v = 0; v < k; ++v) {
        if (!reader.next(tok)) fail_at(reader.line(), "unexpected end of file, expected \"x y\"");
        poly.push_back(parse_xy(tok, reader.line()));
      }
      nb.polygons.push_back(std::move(poly));
    }
    nbs.push_back(std::move(nb));
  }
  if (reader.next(tok)) fail_at(reader.line(), "trailing content");
  return NeighborhoodSet(std::move(nbs));
}

NeighborhoodSet read_neighborhoods(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_neighborhoods(in);
}

void write_neighborhoods(std::ostream& out, const NeighborhoodSet& nbs) {
  out << "nbs " << nbs.size() << '\n';
  for (const Neighborhood& nb : nbs.neighborhoods()) {
    out << "nb " << nb.color << ' ' << nb.polygons.size() << '\n';
    for (const Polygon& poly : nb.polygons) {
      out << "poly " << poly.size() << '\n';
      write_points(out, poly);
    }
  }
}

void write_neighborhoods(const std::filesystem::path& path, const NeighborhoodSet& nbs) {
  auto out = open_out(path);
  write_neighborhoods(out, nbs);
}

Json to_json(const TreeRecord& rec) {
  Json j;
  j["format"] = kTreeFormatVersion;
  j["algorithm"] = rec.algorithm;
  j["candidate"] = rec.candidate;
  j["points"] = Json::array();
  for (const Point p : rec.points) j["points"].push_back({p.x, p.y});
  j["edges"] = Json::array();
  for (const Edge e : rec.edges) j["edges"].push_back({e.i, e.j});
  j["length"] = rec.length;
  if (rec.guess) j["guess"] = {rec.guess->first, rec.guess->second};
  if (rec.representatives) {
    j["representatives"] = Json::array();
    for (const Representative& r : *rec.representatives) j["representatives"].push_back({r.color, r.vertex});
  }
  if (rec.metrics) j["metrics"] = *rec.metrics;
  return j;
}

TreeRecord tree_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("tree file must hold a JSON object");
    if (j.at("format").get<int>() != kTreeFormatVersion) throw InputError("unsupported tree format");
    TreeRecord rec;
    rec.algorithm = j.at("algorithm").get<std::string>();
    rec.candidate = j.at("candidate").get<std::string>();
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) throw InputError("point must be [x, y]");
      rec.points.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be [i, j]");
      const auto u = e[0].get<std::size_t>();
      const auto v = e[1].get<std::size_t>();
      if (u >= rec.points.size() || v >= rec.points.size()) throw InputError("edge out of range");
      rec.edges.emplace_back(u, v);
    }
    rec.length = j.at("length").get<double>();
    if (j.contains("guess")) {
      const auto& g = j["guess"];
      if (!g.is_array() || g.size() != 2) throw InputError("guess must be [a, b]");
      rec.guess = IndexPair{g[0].get<std::size_t>(), g[1].get<std::size_t>()};
    }
    if (j.contains("representatives")) {
      std::vector<Representative> reps;
      for (const auto& r : j["representatives"]) {
        if (!r.is_array() || r.size() != 2) throw InputError("representative must be [color, vertex]");
        reps.push_back({r[0].get<ColorId>(), r[1].get<std::size_t>()});
      }
      if (reps.size() != rec.points.size()) throw InputError("representative count does not match point count");
      rec.representatives = std::move(reps);
    }
    if (j.contains("metrics")) rec.metrics = j["metrics"];
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed tree file: ") + e.what());
  }
}

TreeRecord read_tree(const std::filesystem::path& path) {
  auto in = open_in(path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed tree file: ") + e.what());
  }
  return tree_from_json(j);
}

void write_tree(std::ostream& out, const TreeRecord& rec) { out << to_json(rec).dump(2) << '\n'; }

void write_tree(const std::filesystem::path& path, const TreeRecord& rec) {
  auto out = open_out(path);
  write_tree(out, rec);
}

void write_json(const std::filesystem::path& path, const Json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace longtree
